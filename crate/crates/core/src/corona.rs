//! Construction of corona and generalized corona products of signed
//! graphs, plus the block matrices of the product's adjacency structure.

use std::ops::Range;

use thiserror::Error;

use crate::algebra::{Matrix, Rational};
use crate::graph::{SignedGraph, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoronaError {
    #[error("base has {base_order} vertices but {satellites} satellites were given")]
    SatelliteCountMismatch { base_order: usize, satellites: usize },
}

/// A base graph together with one satellite graph per base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaSpec {
    base: SignedGraph,
    satellites: Vec<SignedGraph>,
}

/// Index ranges of the base and of each satellite copy inside the
/// product's vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaLayout {
    pub base: Range<usize>,
    pub satellites: Vec<Range<usize>>,
}

impl CoronaSpec {
    pub fn new(base: SignedGraph, satellites: Vec<SignedGraph>) -> Result<Self, CoronaError> {
        if base.order() != satellites.len() {
            return Err(CoronaError::SatelliteCountMismatch {
                base_order: base.order(),
                satellites: satellites.len(),
            });
        }
        Ok(CoronaSpec { base, satellites })
    }

    /// The classic two-graph corona: every base vertex receives a copy of
    /// the same satellite.
    pub fn uniform(base: SignedGraph, satellite: &SignedGraph) -> Self {
        let n = base.order();
        CoronaSpec {
            base,
            satellites: vec![satellite.clone(); n],
        }
    }

    pub fn base(&self) -> &SignedGraph {
        &self.base
    }

    pub fn satellites(&self) -> &[SignedGraph] {
        &self.satellites
    }

    pub fn satellite_orders(&self) -> Vec<usize> {
        self.satellites.iter().map(SignedGraph::order).collect()
    }

    pub fn product_order(&self) -> usize {
        self.base.order() + self.satellites.iter().map(SignedGraph::order).sum::<usize>()
    }

    pub fn layout(&self) -> CoronaLayout {
        let n = self.base.order();
        let mut offset = n;
        let satellites = self
            .satellites
            .iter()
            .map(|h| {
                let range = offset..offset + h.order();
                offset = range.end;
                range
            })
            .collect();
        CoronaLayout {
            base: 0..n,
            satellites,
        }
    }

    /// Builds the generalized corona product. Base vertices come first in
    /// input order, then the satellite copies in order; the cross edge
    /// from base vertex l to satellite vertex w is signed μ(v_l)·μ_l(w).
    /// The product carries no explicit marking.
    pub fn product(&self) -> (SignedGraph, CoronaLayout) {
        let layout = self.layout();
        let base_marking = self.base.marking();
        let mut edges: Vec<(usize, usize, Sign)> = self
            .base
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.sign))
            .collect();
        for (l, h) in self.satellites.iter().enumerate() {
            let range = &layout.satellites[l];
            for e in h.edges() {
                edges.push((range.start + e.u, range.start + e.v, e.sign));
            }
            let h_marking = h.marking();
            for w in 0..h.order() {
                edges.push((l, range.start + w, base_marking.get(l) * h_marking.get(w)));
            }
        }
        let product = SignedGraph::new(self.product_order(), edges)
            .expect("corona construction yields a simple graph");
        (product, layout)
    }

    /// The P (base-marking diagonal), Q (satellite-marking rows), and D
    /// (satellite adjacency block diagonal) matrices whose assembly
    /// reproduces the product's adjacency matrix.
    pub fn block_matrices(&self) -> BlockMatrices {
        let n = self.base.order();
        let total: usize = self.satellites.iter().map(SignedGraph::order).sum();
        let layout = self.layout();
        let base_marking = self.base.marking();

        let p = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                base_marking.get(i).rational()
            } else {
                Rational::from_integer(0.into())
            }
        });

        let mut q = Matrix::zero(n, total);
        let mut d = Matrix::zero(total, total);
        for (l, h) in self.satellites.iter().enumerate() {
            let start = layout.satellites[l].start - n;
            let h_marking = h.marking();
            for w in 0..h.order() {
                q.set(l, start + w, h_marking.get(w).rational());
            }
            let adj = h.adjacency();
            for i in 0..h.order() {
                for j in 0..h.order() {
                    d.set(start + i, start + j, adj.get(i, j).clone());
                }
            }
        }
        BlockMatrices { p, q, d }
    }
}

/// Convenience wrapper for the uniform corona of two graphs.
pub fn corona(base: &SignedGraph, satellite: &SignedGraph) -> (SignedGraph, CoronaLayout) {
    CoronaSpec::uniform(base.clone(), satellite).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatrices {
    pub p: Matrix<Rational>,
    pub q: Matrix<Rational>,
    pub d: Matrix<Rational>,
}

impl BlockMatrices {
    /// [[A(G), PQ], [(PQ)ᵀ, D]].
    pub fn assembled(&self, base_adjacency: &Matrix<Rational>) -> Matrix<Rational> {
        let n = self.p.rows();
        let total = self.d.rows();
        let pq = self.p.matmul(&self.q);
        Matrix::from_fn(n + total, n + total, |i, j| match (i < n, j < n) {
            (true, true) => base_adjacency.get(i, j).clone(),
            (true, false) => pq.get(i, j - n).clone(),
            (false, true) => pq.get(j, i - n).clone(),
            (false, false) => self.d.get(i - n, j - n).clone(),
        })
    }
}
