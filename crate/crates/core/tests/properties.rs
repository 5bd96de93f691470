//! Property tests for the structural invariants: oracle agreement for
//! characteristic polynomials, field laws for rational functions, marking
//! and prediction identities, and permutation invariance of coronals.

use proptest::prelude::*;

use signed_corona::algebra::{char_poly, rat, ratfun_matrix_det, Matrix, Polynomial, RationalFunction};
use signed_corona::balance::{
    edge_stats, predicted_edge_stats, predicted_triad_census, triad_census, unbalance_witness,
};
use signed_corona::verify::oracle;
use signed_corona::{corona, coronal, CoronaSpec, CoronalKind, Sign, SignedGraph};

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(proptest::option::of(any::<bool>()), slots).prop_map(
            move |picks| {
                let mut edges = Vec::new();
                let mut it = picks.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if let Some(negative) = it.next().expect("one slot per pair") {
                            let sign = if negative { Sign::Minus } else { Sign::Plus };
                            edges.push((u, v, sign));
                        }
                    }
                }
                SignedGraph::new(n, edges).expect("generated graphs are simple")
            },
        )
    })
}

fn arb_spec() -> impl Strategy<Value = CoronaSpec> {
    arb_graph(1, 4).prop_flat_map(|base| {
        let n = base.order();
        proptest::collection::vec(arb_graph(0, 3), n).prop_map(move |sats| {
            CoronaSpec::new(base.clone(), sats).expect("one satellite per vertex")
        })
    })
}

fn arb_matrix(max_n: usize) -> impl Strategy<Value = Matrix<signed_corona::Rational>> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-3i64..=3, n * n)
            .prop_map(move |vals| Matrix::from_fn(n, n, |i, j| rat(vals[i * n + j])))
    })
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(-4i64..=4, 0..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn arb_nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    arb_poly(max_deg).prop_map(|p| if p.is_zero() { Polynomial::one() } else { p })
}

fn arb_ratfun() -> impl Strategy<Value = RationalFunction> {
    (arb_poly(3), arb_nonzero_poly(3))
        .prop_map(|(num, den)| RationalFunction::new(num, den).expect("den nonzero"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_evaluates_like_the_cofactor_determinant(
        m in arb_matrix(8),
        num in -9i64..=9,
        den in 1i64..=4,
    ) {
        let r = rat(num) / rat(den);
        let n = m.rows();
        let shifted = Matrix::from_fn(n, n, |i, j| {
            if i == j { &r - m.get(i, j) } else { -m.get(i, j).clone() }
        });
        prop_assert_eq!(char_poly(&m).eval(&r), oracle::det_cofactor(&shifted));
    }

    #[test]
    fn rational_functions_form_a_field(a in arb_ratfun(), b in arb_ratfun()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !a.is_zero() {
            let product = &a * &a.recip();
            prop_assert_eq!(product, RationalFunction::one());
        }
        // canonical form makes equality structural: scaling both sides
        // of the quotient changes nothing
        if !a.is_zero() {
            let scale = Polynomial::from_ints(&[3, 7]);
            let rescaled = RationalFunction::new(
                a.num() * &scale,
                a.den() * &scale,
            ).unwrap();
            prop_assert_eq!(rescaled, a);
        }
    }

    #[test]
    fn even_substitution_inverts_square_composition(p in arb_poly(6)) {
        let square = Polynomial::from_ints(&[0, 0, 1]);
        prop_assert_eq!(p.compose(&square).even_substitute().unwrap(), p);
    }

    #[test]
    fn block_triangular_determinant_splits(
        a in arb_ratfun(), b in arb_ratfun(), coupling in arb_ratfun(),
        c in arb_ratfun(), d in arb_ratfun(),
    ) {
        // [[a, b, *], [0, ., .]] pattern: 2x2 upper-left block, 1x1
        // lower-right block, zero lower-left
        let zero = RationalFunction::zero;
        let m = Matrix::from_rows(vec![
            vec![a.clone(), b.clone(), coupling.clone()],
            vec![c.clone(), d.clone(), coupling.clone()],
            vec![zero(), zero(), a.clone()],
        ]);
        let upper = Matrix::from_rows(vec![
            vec![a.clone(), b],
            vec![c, d],
        ]);
        prop_assert_eq!(ratfun_matrix_det(&m), &ratfun_matrix_det(&upper) * &a);
    }

    #[test]
    fn canonical_marking_is_negative_degree_parity(g in arb_graph(0, 7)) {
        let marking = g.canonical_marking();
        for (v, profile) in g.degree_profiles().iter().enumerate() {
            let expected = if profile.d_minus % 2 == 0 { Sign::Plus } else { Sign::Minus };
            prop_assert_eq!(marking.get(v), expected);
        }
    }

    #[test]
    fn balance_matches_cycle_basis_oracle(g in arb_graph(0, 7)) {
        prop_assert_eq!(g.is_balanced(), oracle::cycle_basis_balanced(&g));
    }

    #[test]
    fn uniform_corona_equals_generalized_product(
        base in arb_graph(1, 4),
        satellite in arb_graph(0, 3),
    ) {
        let (via_corona, layout_a) = corona(&base, &satellite);
        let (via_spec, layout_b) = CoronaSpec::uniform(base, &satellite).product();
        prop_assert_eq!(via_corona, via_spec);
        prop_assert_eq!(layout_a, layout_b);
    }

    #[test]
    fn predictions_match_enumeration(spec in arb_spec()) {
        let (product, _) = spec.product();
        prop_assert_eq!(predicted_edge_stats(&spec), edge_stats(&product));
        prop_assert_eq!(predicted_triad_census(&spec), triad_census(&product));
    }

    #[test]
    fn nonempty_witness_implies_unbalanced_product(spec in arb_spec()) {
        match unbalance_witness(&spec) {
            Ok(hits) if !hits.is_empty() => {
                prop_assert!(!spec.product().0.is_balanced());
            }
            _ => {}
        }
    }

    #[test]
    fn balanced_graphs_have_no_odd_triads(g in arb_graph(0, 7)) {
        // a triangle is balanced exactly when its negative count is even
        if g.is_balanced() {
            let census = triad_census(&g);
            prop_assert_eq!((census.t1, census.t3), (0, 0));
        }
    }

    #[test]
    fn block_matrices_assemble_to_adjacency(spec in arb_spec()) {
        let blocks = spec.block_matrices();
        let (product, _) = spec.product();
        prop_assert_eq!(blocks.assembled(&spec.base().adjacency()), product.adjacency());
    }

    #[test]
    fn relabeling_preserves_spectra_and_coronals(
        g in arb_graph(1, 6),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let h = g.relabeled(&perm);
        let found = g.isomorphism_to(&h).unwrap();
        prop_assert!(found.is_some());
        for kind in CoronalKind::ALL {
            prop_assert_eq!(kind.char_poly_of(&g), kind.char_poly_of(&h));
            prop_assert_eq!(coronal(&g, kind), coronal(&h, kind));
        }
    }

    #[test]
    fn round_trip_even_polynomials(p in arb_poly(5)) {
        // shifting a polynomial into x^2 world and back via eval_ratfun
        let square = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        let lifted = p.eval_ratfun(&square);
        let lifted_poly = lifted.as_polynomial().expect("polynomial argument");
        prop_assert_eq!(lifted_poly.even_substitute().unwrap(), p);
    }
}

/// Every spec over the one- and two-vertex building blocks, including
/// explicit-marking overrides: the factorizations and predictions must
/// hold for whatever marking the constituents carry, not only the
/// canonical one.
#[test]
fn exhaustive_small_products_match_oracles() {
    use signed_corona::{corona_poly, Marking};

    fn marking_variants(g: &SignedGraph) -> Vec<SignedGraph> {
        let mut variants = vec![g.clone()];
        let flipped: Vec<Sign> = g
            .canonical_marking()
            .signs()
            .iter()
            .enumerate()
            .map(|(v, s)| if v % 2 == 0 { -*s } else { *s })
            .collect();
        variants.push(g.clone().with_marking(Marking::new(flipped)).unwrap());
        variants
    }

    let shapes: Vec<SignedGraph> = vec![
        SignedGraph::empty(0),
        SignedGraph::empty(1),
        SignedGraph::empty(2),
        SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap(),
        SignedGraph::new(2, [(0, 1, Sign::Minus)]).unwrap(),
    ];
    let satellites: Vec<SignedGraph> = shapes.iter().flat_map(|g| marking_variants(g)).collect();
    let bases: Vec<SignedGraph> = shapes
        .iter()
        .filter(|g| g.order() >= 1)
        .flat_map(|g| marking_variants(g))
        .collect();

    let mut specs = Vec::new();
    for base in &bases {
        match base.order() {
            1 => {
                for s in &satellites {
                    specs.push(CoronaSpec::new(base.clone(), vec![s.clone()]).unwrap());
                }
            }
            2 => {
                for s1 in &satellites {
                    for s2 in &satellites {
                        specs.push(
                            CoronaSpec::new(base.clone(), vec![s1.clone(), s2.clone()]).unwrap(),
                        );
                    }
                }
            }
            _ => unreachable!("building blocks have order 1 or 2"),
        }
    }
    assert!(specs.len() > 400);

    for spec in &specs {
        let (product, _) = spec.product();
        for kind in CoronalKind::ALL {
            let fp = corona_poly(spec, kind).expect("factorization succeeds");
            assert_eq!(
                fp.expanded,
                kind.char_poly_of(&product),
                "kind {kind:?} spec {}",
                signed_corona::verify::describe_spec(spec)
            );
        }
        assert_eq!(predicted_edge_stats(spec), edge_stats(&product));
        assert_eq!(predicted_triad_census(spec), triad_census(&product));
        let blocks = spec.block_matrices();
        assert_eq!(blocks.assembled(&spec.base().adjacency()), product.adjacency());
    }
}
