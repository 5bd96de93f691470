//! Signed-graph data model: canonical markings, matrices, regularity
//! predicates, the balance decision, complements, switching, and
//! signed-marked-graph isomorphism.

use std::fmt;
use std::ops::{Mul, Neg};

use thiserror::Error;

use crate::algebra::{rat, Matrix, Rational};

/// Edge or vertex sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn rational(self) -> Rational {
        rat(self.value())
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Per-vertex ±1 labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marking {
    values: Vec<Sign>,
}

impl Marking {
    pub fn new(values: Vec<Sign>) -> Self {
        Marking { values }
    }

    pub fn uniform(n: usize, sign: Sign) -> Self {
        Marking {
            values: vec![sign; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.values[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.values
    }

    /// Some(sign) when every vertex carries the same mark. None for the
    /// empty marking or mixed marks.
    pub fn uniform_sign(&self) -> Option<Sign> {
        let first = *self.values.first()?;
        self.values.iter().all(|&s| s == first).then_some(first)
    }

    /// (positively marked, negatively marked) vertex counts.
    pub fn mark_counts(&self) -> (usize, usize) {
        let plus = self.values.iter().filter(|s| s.is_positive()).count();
        (plus, self.values.len() - plus)
    }
}

/// An undirected signed edge with endpoints stored as u < v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// Positive/negative incident-edge counts of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub d_plus: usize,
    pub d_minus: usize,
}

impl DegreeProfile {
    pub fn total(self) -> usize {
        self.d_plus + self.d_minus
    }

    pub fn net(self) -> i64 {
        self.d_plus as i64 - self.d_minus as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("marking length {got} does not match graph order {expected}")]
    MarkingLengthMismatch { got: usize, expected: usize },
    #[error("graph order {order} exceeds the isomorphism search limit {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },
}

/// Outcome of the balance decision, carrying a witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// Harary bipartition: every positive edge joins vertices in the same
    /// part, every negative edge crosses parts.
    Balanced { parts: (Vec<usize>, Vec<usize>) },
    /// A cycle (as a vertex sequence, closed implicitly) carrying an odd
    /// number of negative edges.
    Unbalanced { cycle: Vec<usize> },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced { .. })
    }
}

/// Default vertex-count bound for the isomorphism backtracking search.
pub const DEFAULT_ISOMORPHISM_LIMIT: usize = 10;

/// A simple undirected signed graph on vertices 0..n-1, optionally
/// carrying an explicit marking that overrides the canonical one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    explicit_marking: Option<Marking>,
}

impl SignedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<Self, GraphError> {
        let mut canon: Vec<Edge> = Vec::new();
        for (a, b, sign) in edges {
            if a == b {
                return Err(GraphError::LoopEdge { vertex: a });
            }
            for endpoint in [a, b] {
                if endpoint >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: endpoint,
                        order: n,
                    });
                }
            }
            canon.push(Edge {
                u: a.min(b),
                v: a.max(b),
                sign,
            });
        }
        canon.sort_by_key(|e| (e.u, e.v));
        for w in canon.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(GraphError::DuplicateEdge { u: w[0].u, v: w[0].v });
            }
        }
        Ok(SignedGraph {
            n,
            edges: canon,
            explicit_marking: None,
        })
    }

    /// The empty graph on n vertices; n = 0 gives the null graph φ.
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            explicit_marking: None,
        }
    }

    pub fn complete(n: usize, sign: Sign) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v, sign)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize, sign: Sign) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|u| (u, (u + 1) % n, sign));
        Self::new(n, edges).expect("cycle is simple")
    }

    pub fn path(n: usize, sign: Sign) -> Self {
        let edges = (1..n).map(|v| (v - 1, v, sign));
        Self::new(n, edges).expect("path is simple")
    }

    /// Attaches an explicit marking that `marking()` will return instead
    /// of the canonical one.
    pub fn with_marking(mut self, marking: Marking) -> Result<Self, GraphError> {
        if marking.len() != self.n {
            return Err(GraphError::MarkingLengthMismatch {
                got: marking.len(),
                expected: self.n,
            });
        }
        self.explicit_marking = Some(marking);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn explicit_marking(&self) -> Option<&Marking> {
        self.explicit_marking.as_ref()
    }

    pub fn sign_of(&self, a: usize, b: usize) -> Option<Sign> {
        let (u, v) = (a.min(b), a.max(b));
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.sign_of(a, b).is_some()
    }

    /// Signed neighbor lists, ascending by neighbor index.
    pub fn adjacency_lists(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut lists = vec![Vec::new(); self.n];
        for e in &self.edges {
            lists[e.u].push((e.v, e.sign));
            lists[e.v].push((e.u, e.sign));
        }
        for list in &mut lists {
            list.sort_unstable_by_key(|&(w, _)| w);
        }
        lists
    }

    pub fn degree_profiles(&self) -> Vec<DegreeProfile> {
        let mut profiles = vec![DegreeProfile { d_plus: 0, d_minus: 0 }; self.n];
        for e in &self.edges {
            for endpoint in [e.u, e.v] {
                match e.sign {
                    Sign::Plus => profiles[endpoint].d_plus += 1,
                    Sign::Minus => profiles[endpoint].d_minus += 1,
                }
            }
        }
        profiles
    }

    /// Canonical marking: the product of the signs of the edges incident
    /// to each vertex, so μ(v) = (-1)^(d⁻(v)). Isolated vertices get +1.
    pub fn canonical_marking(&self) -> Marking {
        Marking::new(
            self.degree_profiles()
                .iter()
                .map(|p| {
                    if p.d_minus % 2 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect(),
        )
    }

    /// The explicit marking when one is attached, the canonical marking
    /// otherwise.
    pub fn marking(&self) -> Marking {
        self.explicit_marking
            .clone()
            .unwrap_or_else(|| self.canonical_marking())
    }

    /// Symmetric adjacency matrix with entries in {-1, 0, +1}.
    pub fn adjacency(&self) -> Matrix<Rational> {
        let mut m = Matrix::zero(self.n, self.n);
        for e in &self.edges {
            m.set(e.u, e.v, e.sign.rational());
            m.set(e.v, e.u, e.sign.rational());
        }
        m
    }

    fn degree_diagonal(&self) -> Matrix<Rational> {
        let profiles = self.degree_profiles();
        Matrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                rat(profiles[i].total() as i64)
            } else {
                Rational::from_integer(0.into())
            }
        })
    }

    /// L = D - A with D the diagonal of total degrees.
    pub fn laplacian(&self) -> Matrix<Rational> {
        let a = self.adjacency();
        let d = self.degree_diagonal();
        Matrix::from_fn(self.n, self.n, |i, j| d.get(i, j) - a.get(i, j))
    }

    /// Q = D + A.
    pub fn signless_laplacian(&self) -> Matrix<Rational> {
        let a = self.adjacency();
        let d = self.degree_diagonal();
        Matrix::from_fn(self.n, self.n, |i, j| d.get(i, j) + a.get(i, j))
    }

    /// Some(k) when every vertex has net degree k. None for the null
    /// graph.
    pub fn net_regularity(&self) -> Option<i64> {
        let profiles = self.degree_profiles();
        let first = profiles.first()?.net();
        profiles.iter().all(|p| p.net() == first).then_some(first)
    }

    /// Some((r, k)) when the underlying graph is r-regular and the graph
    /// is k-net-regular.
    pub fn co_regularity(&self) -> Option<(usize, i64)> {
        let profiles = self.degree_profiles();
        let first = *profiles.first()?;
        profiles
            .iter()
            .all(|p| p.total() == first.total() && p.net() == first.net())
            .then(|| (first.total(), first.net()))
    }

    /// Harary's criterion by two-coloring each component: positive edges
    /// must join equal colors, negative edges opposite colors.
    pub fn balance(&self) -> Balance {
        let lists = self.adjacency_lists();
        let mut color = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &(v, sign) in &lists[u] {
                    let expected = cu ^ (sign == Sign::Minus);
                    match color[v] {
                        None => {
                            color[v] = Some(expected);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv != expected => {
                            return Balance::Unbalanced {
                                cycle: tree_cycle(u, v, &parent, &depth),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut part0 = Vec::new();
        let mut part1 = Vec::new();
        for (v, c) in color.iter().enumerate() {
            if c.unwrap_or(false) {
                part1.push(v);
            } else {
                part0.push(v);
            }
        }
        Balance::Balanced {
            parts: (part0, part1),
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.balance().is_balanced()
    }

    /// A bipartition of the underlying graph, if one exists. The
    /// lowest-index vertex of every component lands in the first part.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let lists = self.adjacency_lists();
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &(v, _) in &lists[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (v, c) in color.iter().enumerate() {
            if c.unwrap() {
                right.push(v);
            } else {
                left.push(v);
            }
        }
        Some((left, right))
    }

    /// Complement on the same vertices: the non-edges of self, each
    /// signed μ(u)·μ(v), with μ = marking(). The result carries μ as its
    /// explicit marking rather than recomputing canonically.
    pub fn complement(&self) -> SignedGraph {
        let mu = self.marking();
        let edges = (0..self.n).flat_map(|u| {
            let mu = &mu;
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v, mu.get(u) * mu.get(v)))
        });
        Self::new(self.n, edges)
            .expect("complement of a simple graph is simple")
            .with_marking(mu)
            .expect("marking length matches")
    }

    /// Switching: negate every edge crossing the given vertex subset.
    /// Preserves balance and all three spectra. An explicit marking is
    /// carried over unchanged.
    pub fn switched(&self, in_set: &[bool]) -> SignedGraph {
        assert_eq!(in_set.len(), self.n, "switching set length mismatch");
        let edges = self.edges.iter().map(|e| {
            let sign = if in_set[e.u] != in_set[e.v] {
                -e.sign
            } else {
                e.sign
            };
            (e.u, e.v, sign)
        });
        let g = Self::new(self.n, edges).expect("switching preserves simplicity");
        match &self.explicit_marking {
            Some(m) => g.with_marking(m.clone()).expect("length unchanged"),
            None => g,
        }
    }

    /// Relabels vertex i to perm[i]; perm must be a permutation of
    /// 0..n-1. An explicit marking is permuted along.
    pub fn relabeled(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self
            .edges
            .iter()
            .map(|e| (perm[e.u], perm[e.v], e.sign));
        let g = Self::new(self.n, edges).expect("relabeling preserves simplicity");
        match &self.explicit_marking {
            Some(m) => {
                let mut values = vec![Sign::Plus; self.n];
                for (i, &target) in perm.iter().enumerate() {
                    values[target] = m.get(i);
                }
                g.with_marking(Marking::new(values)).expect("length unchanged")
            }
            None => g,
        }
    }

    /// A vertex bijection onto `other` preserving edges, edge signs, and
    /// markings, found by backtracking. Intended for small graphs; orders
    /// above DEFAULT_ISOMORPHISM_LIMIT are rejected.
    pub fn isomorphism_to(&self, other: &SignedGraph) -> Result<Option<Vec<usize>>, GraphError> {
        self.isomorphism_to_with_limit(other, DEFAULT_ISOMORPHISM_LIMIT)
    }

    pub fn isomorphism_to_with_limit(
        &self,
        other: &SignedGraph,
        limit: usize,
    ) -> Result<Option<Vec<usize>>, GraphError> {
        for g in [self, other] {
            if g.order() > limit {
                return Err(GraphError::SizeLimitExceeded {
                    order: g.order(),
                    limit,
                });
            }
        }
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return Ok(None);
        }
        let n = self.n;
        let (mu1, mu2) = (self.marking(), other.marking());
        let (prof1, prof2) = (self.degree_profiles(), other.degree_profiles());
        let mut invariants1: Vec<_> = (0..n).map(|v| (prof1[v], mu1.get(v))).collect();
        let mut invariants2: Vec<_> = (0..n).map(|v| (prof2[v], mu2.get(v))).collect();
        let key = |&(p, m): &(DegreeProfile, Sign)| (p.d_plus, p.d_minus, m.value());
        invariants1.sort_by_key(key);
        invariants2.sort_by_key(key);
        if invariants1 != invariants2 {
            return Ok(None);
        }

        let candidates: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| prof1[v] == prof2[w] && mu1.get(v) == mu2.get(w))
                    .collect()
            })
            .collect();
        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend_isomorphism(other, &candidates, &mut mapping, &mut used, 0) {
            Ok(Some(mapping))
        } else {
            Ok(None)
        }
    }

    fn extend_isomorphism(
        &self,
        other: &SignedGraph,
        candidates: &[Vec<usize>],
        mapping: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == self.n {
            return true;
        }
        'next: for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            for prev in 0..v {
                if self.sign_of(v, prev) != other.sign_of(w, mapping[prev]) {
                    continue 'next;
                }
            }
            mapping[v] = w;
            used[w] = true;
            if self.extend_isomorphism(other, candidates, mapping, used, v + 1) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}

fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let mut from_u = vec![u];
    let mut from_v = vec![v];
    let (mut a, mut b) = (u, v);
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_v.push(b);
    }
    while a != b {
        a = parent[a];
        from_u.push(a);
        b = parent[b];
        from_v.push(b);
    }
    from_v.pop();
    from_u.extend(from_v.into_iter().rev());
    from_u
}
