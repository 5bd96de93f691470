//! Edge statistics by sign and endpoint-marking class, the triad census,
//! predicted counts for generalized corona products, and the sufficient
//! unbalance conditions on satellite edges.

use thiserror::Error;

use crate::corona::CoronaSpec;
use crate::graph::{Edge, SignedGraph, Sign};

/// Counts of edges of one sign, split by the marks of their endpoints.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MarkPairCounts {
    pub both_plus: usize,
    pub mixed: usize,
    pub both_minus: usize,
}

impl MarkPairCounts {
    pub fn total(&self) -> usize {
        self.both_plus + self.mixed + self.both_minus
    }
}

/// The six-way edge classification: sign × endpoint-mark pattern.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeClassCounts {
    pub positive: MarkPairCounts,
    pub negative: MarkPairCounts,
}

impl EdgeClassCounts {
    pub fn total(&self) -> usize {
        self.positive.total() + self.negative.total()
    }
}

/// Classifies every edge under the graph's marking.
pub fn edge_class_counts(g: &SignedGraph) -> EdgeClassCounts {
    let mu = g.marking();
    let mut counts = EdgeClassCounts::default();
    for e in g.edges() {
        let bucket = match e.sign {
            Sign::Plus => &mut counts.positive,
            Sign::Minus => &mut counts.negative,
        };
        match (mu.get(e.u), mu.get(e.v)) {
            (Sign::Plus, Sign::Plus) => bucket.both_plus += 1,
            (Sign::Minus, Sign::Minus) => bucket.both_minus += 1,
            _ => bucket.mixed += 1,
        }
    }
    counts
}

/// Triangle counts by number of negative edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriadCensus {
    pub t0: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

impl TriadCensus {
    pub fn total(&self) -> usize {
        self.t0 + self.t1 + self.t2 + self.t3
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.t0, self.t1, self.t2, self.t3]
    }

    fn add_triangle(&mut self, negatives: usize) {
        match negatives {
            0 => self.t0 += 1,
            1 => self.t1 += 1,
            2 => self.t2 += 1,
            3 => self.t3 += 1,
            _ => unreachable!("a triangle has at most 3 edges"),
        }
    }
}

impl std::ops::Add for TriadCensus {
    type Output = TriadCensus;
    fn add(self, rhs: TriadCensus) -> TriadCensus {
        TriadCensus {
            t0: self.t0 + rhs.t0,
            t1: self.t1 + rhs.t1,
            t2: self.t2 + rhs.t2,
            t3: self.t3 + rhs.t3,
        }
    }
}

/// Enumerates all triangles by neighbor intersection over each edge,
/// counting a triangle at its two lowest vertices.
pub fn triad_census(g: &SignedGraph) -> TriadCensus {
    let lists = g.adjacency_lists();
    let mut census = TriadCensus::default();
    for e in g.edges() {
        for &(w, uw) in &lists[e.u] {
            if w <= e.v {
                continue;
            }
            if let Some(vw) = g.sign_of(e.v, w) {
                let negatives = [e.sign, uw, vw]
                    .iter()
                    .filter(|s| **s == Sign::Minus)
                    .count();
                census.add_triangle(negatives);
            }
        }
    }
    census
}

/// Plain edge totals by sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EdgeStats {
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
}

/// Direct count on a built graph.
pub fn edge_stats(g: &SignedGraph) -> EdgeStats {
    let positive = g.edges().iter().filter(|e| e.sign == Sign::Plus).count();
    EdgeStats {
        total: g.edge_count(),
        positive,
        negative: g.edge_count() - positive,
    }
}

/// Predicted edge totals of the corona product, in per-vertex form: base
/// vertex l contributes the satellite-l mark counts matching its own mark.
/// Agrees with direct enumeration for every spec.
pub fn predicted_edge_stats(spec: &CoronaSpec) -> EdgeStats {
    let mut stats = edge_stats(spec.base());
    let base_marking = spec.base().marking();
    for (l, h) in spec.satellites().iter().enumerate() {
        let hs = edge_stats(h);
        stats.total += hs.total + h.order();
        stats.positive += hs.positive;
        stats.negative += hs.negative;
        let (plus_marks, minus_marks) = h.marking().mark_counts();
        match base_marking.get(l) {
            Sign::Plus => {
                stats.positive += plus_marks;
                stats.negative += minus_marks;
            }
            Sign::Minus => {
                stats.positive += minus_marks;
                stats.negative += plus_marks;
            }
        }
    }
    stats
}

/// The aggregate-form prediction, multiplying global mark counts of the
/// base with summed satellite mark counts. Coincides with the per-vertex
/// form when the satellites are identical and the base marks uniform;
/// overcounts otherwise. Exposed for comparison only.
pub fn aggregate_edge_stats(spec: &CoronaSpec) -> EdgeStats {
    let mut stats = edge_stats(spec.base());
    let (base_plus, base_minus) = spec.base().marking().mark_counts();
    let mut sat_plus = 0;
    let mut sat_minus = 0;
    for h in spec.satellites() {
        let hs = edge_stats(h);
        stats.total += hs.total + h.order();
        stats.positive += hs.positive;
        stats.negative += hs.negative;
        let (p, m) = h.marking().mark_counts();
        sat_plus += p;
        sat_minus += m;
    }
    stats.positive += base_plus * sat_plus + base_minus * sat_minus;
    stats.negative += base_plus * sat_minus + base_minus * sat_plus;
    stats
}

/// Predicted triad census of the corona product, per-vertex form: each
/// satellite edge (u, w, s) forms one new triangle with its base vertex l,
/// whose negative count is that of {μ(v_l)·μ_l(u), μ(v_l)·μ_l(w), s}.
pub fn predicted_triad_census(spec: &CoronaSpec) -> TriadCensus {
    let mut census = triad_census(spec.base());
    let base_marking = spec.base().marking();
    for (l, h) in spec.satellites().iter().enumerate() {
        census = census + triad_census(h);
        let mu = h.marking();
        let apex = base_marking.get(l);
        for e in h.edges() {
            let negatives = [apex * mu.get(e.u), apex * mu.get(e.v), e.sign]
                .iter()
                .filter(|s| **s == Sign::Minus)
                .count();
            census.add_triangle(negatives);
        }
    }
    census
}

/// The aggregate-form triad prediction (global base mark counts times
/// summed satellite edge classes). Exposed for comparison only.
pub fn aggregate_triad_census(spec: &CoronaSpec) -> TriadCensus {
    let mut census = triad_census(spec.base());
    let (base_plus, base_minus) = spec.base().marking().mark_counts();
    let mut classes = EdgeClassCounts::default();
    for h in spec.satellites() {
        census = census + triad_census(h);
        let c = edge_class_counts(h);
        classes.positive.both_plus += c.positive.both_plus;
        classes.positive.mixed += c.positive.mixed;
        classes.positive.both_minus += c.positive.both_minus;
        classes.negative.both_plus += c.negative.both_plus;
        classes.negative.mixed += c.negative.mixed;
        classes.negative.both_minus += c.negative.both_minus;
    }
    census.t0 += base_plus * classes.positive.both_plus + base_minus * classes.positive.both_minus;
    census.t1 += base_plus * (classes.positive.mixed + classes.negative.both_plus)
        + base_minus * (classes.positive.mixed + classes.negative.both_minus);
    census.t2 += base_plus * (classes.positive.both_minus + classes.negative.mixed)
        + base_minus * (classes.positive.both_plus + classes.negative.mixed);
    census.t3 += base_plus * classes.negative.both_minus + base_minus * classes.negative.both_plus;
    census
}

/// The three satellite-edge patterns that force an unbalanced product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnbalanceCondition {
    /// A positive edge joining oppositely marked vertices.
    PositiveOppositeMarks,
    /// A negative edge joining two negatively marked vertices.
    NegativeBothMinus,
    /// A negative edge joining two positively marked vertices.
    NegativeBothPlus,
}

impl UnbalanceCondition {
    pub fn number(self) -> u8 {
        match self {
            UnbalanceCondition::PositiveOppositeMarks => 1,
            UnbalanceCondition::NegativeBothMinus => 2,
            UnbalanceCondition::NegativeBothPlus => 3,
        }
    }
}

/// One offending satellite edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnbalanceHit {
    pub satellite: usize,
    pub edge: Edge,
    pub condition: UnbalanceCondition,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BalanceError {
    #[error("the {which} graph is already unbalanced, so the sufficient conditions do not apply")]
    PreconditionUnbalancedInput { which: String },
}

/// Classifies every satellite edge against the three sufficient
/// conditions. Requires the base and all satellites individually
/// balanced; a nonempty result implies the product is unbalanced.
pub fn unbalance_witness(spec: &CoronaSpec) -> Result<Vec<UnbalanceHit>, BalanceError> {
    if !spec.base().is_balanced() {
        return Err(BalanceError::PreconditionUnbalancedInput {
            which: "base".to_owned(),
        });
    }
    for (l, h) in spec.satellites().iter().enumerate() {
        if !h.is_balanced() {
            return Err(BalanceError::PreconditionUnbalancedInput {
                which: format!("satellite {l}"),
            });
        }
    }
    let mut hits = Vec::new();
    for (l, h) in spec.satellites().iter().enumerate() {
        let mu = h.marking();
        for e in h.edges() {
            let marks = (mu.get(e.u), mu.get(e.v));
            let condition = match (e.sign, marks) {
                (Sign::Plus, (a, b)) if a != b => {
                    Some(UnbalanceCondition::PositiveOppositeMarks)
                }
                (Sign::Minus, (Sign::Minus, Sign::Minus)) => {
                    Some(UnbalanceCondition::NegativeBothMinus)
                }
                (Sign::Minus, (Sign::Plus, Sign::Plus)) => {
                    Some(UnbalanceCondition::NegativeBothPlus)
                }
                _ => None,
            };
            if let Some(condition) = condition {
                hits.push(UnbalanceHit {
                    satellite: l,
                    edge: *e,
                    condition,
                });
            }
        }
    }
    Ok(hits)
}
