//! Exact spectral and structural-balance toolkit for signed graphs and
//! their generalized corona products.
//!
//! Everything is computed over arbitrary-precision rationals: balance
//! statistics and triad censuses are exact counts, and the
//! characteristic, Laplacian, and signless-Laplacian polynomials of
//! corona products are produced both directly and in factored form, with
//! the two routes checked against each other.
//!
//! ```
//! use signed_corona::{corona_poly, coronal, CoronaSpec, CoronalKind, Sign, SignedGraph};
//!
//! // a negative edge between two vertices, with a single-vertex
//! // satellite attached to each
//! let base = SignedGraph::new(2, [(0, 1, Sign::Minus)])?;
//! let spec = CoronaSpec::uniform(base, &SignedGraph::empty(1));
//!
//! let (product, _) = spec.product();
//! assert_eq!(product.order(), 4);
//!
//! // the factored polynomial equals the product's characteristic
//! // polynomial, x^4 - 3x^2 + 1
//! let fp = corona_poly(&spec, CoronalKind::Adjacency).unwrap();
//! assert_eq!(fp.expanded, CoronalKind::Adjacency.char_poly_of(&product));
//! assert_eq!(fp.expanded.to_string(), "x^4 - 3x^2 + 1");
//!
//! // the coronal of a single vertex is 1/x
//! assert_eq!(coronal(&SignedGraph::empty(1), CoronalKind::Adjacency).to_string(), "1 / x");
//! # Ok::<(), signed_corona::GraphError>(())
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod balance;
pub mod corona;
pub mod graph;
pub mod spectral;
pub mod verify;

pub use algebra::{Matrix, Polynomial, Rational, RationalFunction};
pub use balance::{
    edge_class_counts, edge_stats, predicted_edge_stats, predicted_triad_census, triad_census,
    unbalance_witness, EdgeClassCounts, EdgeStats, TriadCensus, UnbalanceCondition, UnbalanceHit,
};
pub use corona::{corona, BlockMatrices, CoronaError, CoronaLayout, CoronaSpec};
pub use graph::{Balance, DegreeProfile, Edge, GraphError, Marking, Sign, SignedGraph};
pub use spectral::{
    bipartite_regular_poly, bipartite_split, bipartite_two_family_char_poly, coronal,
    coronal_co_regular, coronal_net_regular, coronal_rank_one, corona_poly, cospectral,
    g_determinant, two_family_spec, BipartiteSplit, CoronalKind, FactoredPoly, SpectralError,
};
