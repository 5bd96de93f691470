//! Acceptance suite: one test per criterion, executed at full scale with
//! fixed seeds and exact (tolerance-zero) comparisons throughout.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use signed_corona::balance::{
    edge_stats, predicted_edge_stats, predicted_triad_census, triad_census, unbalance_witness,
};
use signed_corona::verify::{self, oracle, random_graph, random_spec};
use signed_corona::{
    bipartite_regular_poly, bipartite_two_family_char_poly, coronal, coronal_co_regular,
    coronal_net_regular, coronal_rank_one, corona_poly, cospectral, two_family_spec, CoronaSpec,
    CoronalKind, Sign, SignedGraph, UnbalanceCondition,
};

const SEED: u64 = 0x5eed;
const TRIALS: usize = 200;
const MAX_BASE: usize = 5;
const MAX_SAT: usize = 4;

fn spec_family(salt: u64) -> Vec<CoronaSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.wrapping_add(salt));
    (0..TRIALS)
        .map(|_| random_spec(&mut rng, MAX_BASE, MAX_SAT))
        .collect()
}

fn worked_example_spec() -> CoronaSpec {
    let base = SignedGraph::path(2, Sign::Plus);
    let h1 = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus)]).unwrap();
    let h2 = SignedGraph::new(
        3,
        [(0, 1, Sign::Minus), (0, 2, Sign::Minus), (1, 2, Sign::Plus)],
    )
    .unwrap();
    CoronaSpec::new(base, vec![h1, h2]).unwrap()
}

#[test]
fn criterion_1_characteristic_polynomial_theorem() {
    let start = Instant::now();
    for spec in spec_family(1) {
        let fp = corona_poly(&spec, CoronalKind::Adjacency).expect("factorization succeeds");
        let (product, _) = spec.product();
        assert_eq!(
            fp.expanded,
            CoronalKind::Adjacency.char_poly_of(&product),
            "factored characteristic polynomial differs from the oracle on {}",
            verify::describe_spec(&spec)
        );
        assert_eq!(fp.product_of_factors(), fp.expanded);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "200 adjacency checks took {elapsed:?}, budget is 60 s"
    );
    println!("ACCEPTANCE characteristic-polynomial-theorem: PASS ({TRIALS} specs in {elapsed:?})");
}

#[test]
fn criterion_2_laplacian_and_signless_theorems() {
    let start = Instant::now();
    for kind in [CoronalKind::Laplacian, CoronalKind::SignlessLaplacian] {
        for spec in spec_family(2) {
            let fp = corona_poly(&spec, kind).expect("factorization succeeds");
            let (product, _) = spec.product();
            assert_eq!(
                fp.expanded,
                kind.char_poly_of(&product),
                "{kind:?} factorization differs from the oracle on {}",
                verify::describe_spec(&spec)
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "Laplacian + signless checks took {elapsed:?}, budget is 120 s"
    );
    println!("ACCEPTANCE laplacian-and-signless-theorems: PASS (2x{TRIALS} specs in {elapsed:?})");
}

#[test]
fn criterion_3_worked_example_golden() {
    let spec = worked_example_spec();
    let (product, _) = spec.product();
    assert_eq!(product.order(), 8);

    let stats = edge_stats(&product);
    assert_eq!((stats.total, stats.positive, stats.negative), (12, 5, 7));

    assert_eq!(triad_census(&product).as_array(), [0, 1, 4, 1]);
    assert!(!product.is_balanced());

    // The sufficient-condition witness, frozen from classifying each
    // satellite edge: in the path satellite the positive edge a-b joins
    // opposite marks (condition 1) and the negative edge b-c joins two
    // minus marks (condition 2). The triad satellite's edges match no
    // condition: both its negative edges join opposite marks and its
    // positive edge joins two minus marks, and the triangles they form
    // with their (positively marked) base vertex are balanced T2s --
    // consistent with the census above, whose only unbalanced triangles
    // (one T1, one T3) come from the path satellite.
    let hits = unbalance_witness(&spec).expect("all constituents are balanced");
    let summary: Vec<(usize, usize, usize, UnbalanceCondition)> = hits
        .iter()
        .map(|h| (h.satellite, h.edge.u, h.edge.v, h.condition))
        .collect();
    assert_eq!(
        summary,
        vec![
            (0, 0, 1, UnbalanceCondition::PositiveOppositeMarks),
            (0, 1, 2, UnbalanceCondition::NegativeBothMinus),
        ]
    );
    assert!(!hits.is_empty(), "nonempty witness implies unbalance");
    println!("ACCEPTANCE worked-example-golden: PASS");
}

#[test]
fn criterion_4_table_predictions() {
    for spec in spec_family(4) {
        let (product, _) = spec.product();
        assert_eq!(
            predicted_edge_stats(&spec),
            edge_stats(&product),
            "edge prediction differs on {}",
            verify::describe_spec(&spec)
        );
        let census = triad_census(&product);
        assert_eq!(
            predicted_triad_census(&spec),
            census,
            "triad prediction differs on {}",
            verify::describe_spec(&spec)
        );
        // total-triad identity
        let expected_total = triad_census(spec.base()).total()
            + spec
                .satellites()
                .iter()
                .map(|h| triad_census(h).total() + h.edge_count())
                .sum::<usize>();
        assert_eq!(census.total(), expected_total);
    }
    println!("ACCEPTANCE table-predictions: PASS ({TRIALS} specs)");
}

#[test]
fn criterion_5_coronal_closed_forms_and_cross_check() {
    // instance battery: empty graphs to order 5, both uniform signings of
    // the cycles C3..C6, and K2 with each sign
    let battery = verify::closed_form_battery();
    assert!(battery.len() >= 13);
    for g in &battery {
        let closed = coronal_net_regular(g).expect("battery members are net-regular");
        assert_eq!(closed, coronal(g, CoronalKind::Adjacency), "net-regular form");
        for kind in [CoronalKind::Laplacian, CoronalKind::SignlessLaplacian] {
            let closed = coronal_co_regular(g, kind).expect("battery members are co-regular");
            assert_eq!(closed, coronal(g, kind), "{kind:?} co-regular form");
        }
    }

    // the two computation routes agree on 100 random graphs of order <= 8
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.wrapping_add(5));
    for _ in 0..100 {
        let order = rng.gen_range(0..=8);
        let g = random_graph(&mut rng, order, 0.5);
        for kind in CoronalKind::ALL {
            assert_eq!(
                coronal(&g, kind),
                coronal_rank_one(&g, kind),
                "coronal routes differ for {kind:?}"
            );
        }
    }
    println!("ACCEPTANCE coronal-closed-forms: PASS (battery of {} + 100 random graphs)", battery.len());
}

#[test]
fn criterion_6_bipartite_square_root_theorems() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.wrapping_add(6));
    let mut sign_draw = |shape: &SignedGraph| -> SignedGraph {
        let edges: Vec<_> = shape
            .edges()
            .iter()
            .map(|e| {
                let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                (e.u, e.v, sign)
            })
            .collect();
        SignedGraph::new(shape.order(), edges).unwrap()
    };

    let shapes = verify::bipartite_bases();
    let pool = verify::satellite_pool();
    let mut checks = 0usize;
    for shape in &shapes {
        for _ in 0..2 {
            let base = sign_draw(shape);
            for z1 in &pool {
                for z2 in &pool {
                    let via_split = bipartite_two_family_char_poly(&base, z1, z2).unwrap();
                    let spec = two_family_spec(&base, z1, z2).unwrap();
                    let via_theorem = corona_poly(&spec, CoronalKind::Adjacency).unwrap();
                    assert_eq!(via_split.expanded, via_theorem.expanded);
                    let (product, _) = spec.product();
                    assert_eq!(via_split.expanded, CoronalKind::Adjacency.char_poly_of(&product));
                    checks += 1;
                }
            }
        }
    }

    // Laplacian / signless forms on the regular equal-part bases
    let mut regular_checks = 0usize;
    for shape in &shapes {
        let profiles = shape.degree_profiles();
        let regular = profiles.windows(2).all(|w| w[0].total() == w[1].total());
        let equal_parts = shape
            .bipartition()
            .is_some_and(|(l, r)| l.len() == r.len());
        if !(regular && equal_parts) {
            continue; // the path on 4 vertices
        }
        for _ in 0..2 {
            let base = sign_draw(shape);
            for z1 in &pool {
                for z2 in &pool {
                    for kind in [CoronalKind::Laplacian, CoronalKind::SignlessLaplacian] {
                        let via_split = bipartite_regular_poly(&base, z1, z2, kind).unwrap();
                        let spec = two_family_spec(&base, z1, z2).unwrap();
                        let via_theorem = corona_poly(&spec, kind).unwrap();
                        assert_eq!(via_split.expanded, via_theorem.expanded);
                        let (product, _) = spec.product();
                        assert_eq!(via_split.expanded, kind.char_poly_of(&product));
                        regular_checks += 1;
                    }
                }
            }
        }
    }
    println!(
        "ACCEPTANCE bipartite-square-root-theorems: PASS ({checks} adjacency + {regular_checks} shifted checks)"
    );
}

#[test]
fn criterion_7_cospectrality_corollaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED.wrapping_add(7));
    for _ in 0..20 {
        // switching-equivalent base pair on 4-5 vertices, verified
        // cospectral against the direct polynomials
        let n = rng.gen_range(4..=5);
        let base = random_graph(&mut rng, n, 0.6);
        let mut cut = vec![false; n];
        for flag in cut.iter_mut() {
            *flag = rng.gen_bool(0.5);
        }
        cut[rng.gen_range(0..n)] = true;
        let switched = base.switched(&cut);
        for kind in CoronalKind::ALL {
            assert!(cospectral(&base, &switched, kind));
        }

        // shared-coronal satellites: identical copies on every vertex
        let sat_order = rng.gen_range(0..=MAX_SAT);
        let satellite = random_graph(&mut rng, sat_order, 0.5);
        let product_a = CoronaSpec::uniform(base.clone(), &satellite).product().0;
        let product_b = CoronaSpec::uniform(switched.clone(), &satellite).product().0;
        for kind in CoronalKind::ALL {
            assert!(
                cospectral(&product_a, &product_b, kind),
                "products over cospectral bases must be {kind:?}-cospectral"
            );
        }
    }

    // swapped families: 2n pairwise-cospectral satellites with
    // equal coronals (relabelings of one graph)
    for _ in 0..10 {
        let n = rng.gen_range(1..=3);
        let base = random_graph(&mut rng, n, 0.6);
        let h_order = rng.gen_range(1..=3);
        let h = random_graph(&mut rng, h_order, 0.5);
        let family: Vec<SignedGraph> = (0..2 * n)
            .map(|_| {
                let mut perm: Vec<usize> = (0..h.order()).collect();
                for i in (1..perm.len()).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                h.relabeled(&perm)
            })
            .collect();
        for pair in family.windows(2) {
            assert!(cospectral(&pair[0], &pair[1], CoronalKind::Adjacency));
            assert_eq!(
                coronal(&pair[0], CoronalKind::Adjacency),
                coronal(&pair[1], CoronalKind::Adjacency)
            );
        }
        let first = CoronaSpec::new(base.clone(), family[..n].to_vec()).unwrap();
        let second = CoronaSpec::new(base.clone(), family[n..].to_vec()).unwrap();
        for kind in CoronalKind::ALL {
            assert!(cospectral(&first.product().0, &second.product().0, kind));
        }
    }
    println!("ACCEPTANCE cospectrality-corollaries: PASS");
}

#[test]
fn criterion_8_balance_oracle_exhaustive() {
    // every signing of every underlying graph on 4 vertices: each of the
    // six vertex pairs is absent, positive, or negative
    let slots = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut count = 0usize;
    for code in 0..3usize.pow(6) {
        let mut c = code;
        let mut edges = Vec::new();
        for &(u, v) in &slots {
            match c % 3 {
                0 => {}
                1 => edges.push((u, v, Sign::Plus)),
                _ => edges.push((u, v, Sign::Minus)),
            }
            c /= 3;
        }
        let g = SignedGraph::new(4, edges).unwrap();
        assert_eq!(
            g.is_balanced(),
            oracle::cycle_basis_balanced(&g),
            "balance disagreement on graph code {code}"
        );
        count += 1;
    }
    assert_eq!(count, 729);
    println!("ACCEPTANCE balance-oracle: PASS ({count} signed graphs)");
}
