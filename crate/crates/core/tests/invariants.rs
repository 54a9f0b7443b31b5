use kgraph_ktheory::complex::TwoTermComplex;
use kgraph_ktheory::index::binomial;
use kgraph_ktheory::{
    corpus, e2_page, evans_complex, homology, k_theory_verdict, kunneth_check, monoid_closed_form,
    smith_normal_form, tensor_monoid_complex, tensor_two, BigInt, GraphDocument, HomologyGroup,
    IntMatrix, KGraph,
};
use proptest::prelude::*;

fn groups(spec: &KGraph) -> Vec<HomologyGroup> {
    homology(&evans_complex(&spec.coadjacencies()).unwrap()).unwrap()
}

fn z(order: i64, copies: usize) -> HomologyGroup {
    HomologyGroup::cyclic_power(&BigInt::from(order), copies)
}

#[test]
fn coordinate_order_does_not_change_homology() {
    let a = corpus::monoid_spec(&[3, 5, 7]).unwrap();
    let b = corpus::monoid_spec(&[7, 5, 3]).unwrap();
    let expected = vec![z(2, 1), z(2, 2), z(2, 1), HomologyGroup::zero()];
    assert_eq!(groups(&a), expected);
    assert_eq!(groups(&b), expected);

    for spec in corpus::random_polynomial_family(20, 3, 3, 41) {
        let k = spec.rank();
        let reversed: Vec<usize> = (1..=k).rev().collect();
        let rotated: Vec<usize> = (2..=k).chain(std::iter::once(1)).collect();
        for sigma in [reversed, rotated] {
            let permuted = spec.permute_coordinates(&sigma).unwrap();
            assert_eq!(groups(&permuted), groups(&spec), "{sigma:?}");
        }
    }
}

#[test]
fn coadjacency_follows_permutation() {
    for spec in corpus::random_polynomial_family(10, 3, 4, 5) {
        let k = spec.rank();
        let sigma: Vec<usize> = (1..=k).rev().collect();
        let permuted = spec.permute_coordinates(&sigma).unwrap();
        for i in 1..=k {
            assert_eq!(
                permuted.coadjacency(i).unwrap().matrix,
                spec.coadjacency(sigma[i - 1]).unwrap().matrix
            );
        }
    }
}

#[test]
fn restrictions_compose() {
    for spec in corpus::random_polynomial_family(10, 3, 4, 6) {
        let k = spec.rank();
        for j in 1..=k {
            let outer = spec.coordinate_restriction(j).unwrap();
            for jj in 1..=j {
                assert_eq!(
                    outer.coordinate_restriction(jj).unwrap(),
                    spec.coordinate_restriction(jj).unwrap()
                );
            }
        }
    }
}

#[test]
fn euler_characteristic_matches_betti_numbers() {
    let mut specs = corpus::random_polynomial_family(30, 4, 4, 12);
    for m in corpus::monoid_exhaustive(3, 1, 4) {
        specs.push(corpus::monoid_spec(&m).unwrap());
    }
    for spec in specs {
        let complex = evans_complex(&spec.coadjacencies()).unwrap();
        let betti: i64 = homology(&complex)
            .unwrap()
            .iter()
            .enumerate()
            .map(|(p, h)| if p % 2 == 0 { h.free_rank as i64 } else { -(h.free_rank as i64) })
            .sum();
        assert_eq!(complex.euler_characteristic(), betti);
    }
}

#[test]
fn closed_form_agrees_with_elimination() {
    for k in 2..=4 {
        for m in corpus::monoid_exhaustive(k, 2, 9) {
            let b: Vec<BigInt> = m.iter().map(|&x| BigInt::from(1) - BigInt::from(x)).collect();
            let report = kunneth_check(&b).unwrap();
            assert!(report.matches(), "{m:?}: {:?}", report.mismatches);
        }
    }
    for m in corpus::monoid_exhaustive(2, 1, 9).into_iter().filter(|m| m != &[1, 1]) {
        let b: Vec<BigInt> = m.iter().map(|&x| BigInt::from(1) - BigInt::from(x)).collect();
        let spec = corpus::monoid_spec(&m).unwrap();
        assert_eq!(monoid_closed_form(&b).unwrap(), groups(&spec));
    }
}

#[test]
fn nontrivial_monoid_three_graphs() {
    for m in corpus::monoid_exhaustive(3, 2, 9) {
        let g = m.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x as i64 - 1));
        let spec = corpus::monoid_spec(&m).unwrap();
        let expected = vec![z(g, 1), z(g, 2), z(g, 1), HomologyGroup::zero()];
        assert_eq!(groups(&spec), expected, "{m:?}");
        let v = k_theory_verdict(&spec).unwrap();
        if g > 1 {
            assert_eq!(v.k1, Some(z(g, 2)));
            let ses = v.ses.unwrap();
            assert_eq!(ses.sub, v.e2.entry(0, 0));
            assert_eq!(ses.quotient, v.e2.entry(2, -2));
        }
    }
}

#[test]
fn e2_columns_are_homology_and_verdict_is_total() {
    let mut specs = corpus::random_polynomial_family(40, 4, 4, 99);
    for m in corpus::monoid_random(4, 1, 9, 40, 3) {
        specs.push(corpus::monoid_spec(&m).unwrap());
    }
    for spec in specs {
        let h = groups(&spec);
        let page = e2_page(&h, spec.rank()).unwrap();
        assert_eq!(page.columns, h);
        for (p, hp) in h.iter().enumerate() {
            assert_eq!(&page.entry(p as i64, 0), hp);
            assert_eq!(&page.entry(p as i64, 4), hp);
            assert!(page.entry(p as i64, 1).is_trivial());
        }
        let v = k_theory_verdict(&spec).unwrap();
        assert_eq!(v.e2.columns, h);
    }
}

#[test]
fn unimodular_coadjacency_kills_homology() {
    let a = IntMatrix::from_i64_rows(&[[1, 1], [1, 0]]);
    for polys in [vec![vec![0, 1]], vec![vec![0, 1], vec![0, 0, 1]], vec![vec![0, 1], vec![1, 1], vec![0, 2]]] {
        let spec = corpus::polynomial_family(&a, &polys).unwrap();
        assert!(groups(&spec).iter().all(HomologyGroup::is_trivial), "{polys:?}");
    }
}

#[test]
fn generated_documents_round_trip() {
    let mut specs = corpus::random_polynomial_family(20, 4, 4, 8);
    for m in corpus::monoid_random(3, 1, 1000, 10, 8) {
        specs.push(corpus::monoid_spec(&m).unwrap());
    }
    let docs: Vec<GraphDocument> = specs.iter().map(GraphDocument::from_spec).collect();
    let text = serde_json::to_string(&docs).unwrap();
    let back = GraphDocument::parse_list(&text).unwrap();
    for (doc, spec) in back.iter().zip(&specs) {
        assert_eq!(&doc.to_spec().unwrap(), spec);
    }
}

#[test]
fn seeded_generators_are_deterministic() {
    assert_eq!(
        corpus::random_polynomial_family(15, 4, 4, 77),
        corpus::random_polynomial_family(15, 4, 4, 77)
    );
    assert_eq!(corpus::monoid_random(4, 1, 9, 30, 1), corpus::monoid_random(4, 1, 9, 30, 1));
    assert_ne!(corpus::monoid_random(4, 1, 9, 30, 1), corpus::monoid_random(4, 1, 9, 30, 2));
}

/// `d_1 ... d_r` equals the gcd of the `r x r` minors; checked here for
/// 2 x 2 matrices by hand.
#[test]
fn two_by_two_divisors() {
    for (rows, d1, d2) in [([[2, 4], [6, 8]], 2, 4), ([[0, 0], [0, 5]], 5, 0), ([[3, 0], [0, 5]], 1, 15)] {
        let m = IntMatrix::from_i64_rows(&rows);
        let snf = smith_normal_form(&m);
        assert!(snf.certify(&m));
        assert_eq!(snf.divisors, vec![BigInt::from(d1), BigInt::from(d2)]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn iterated_tensor_is_a_complex(b in prop::collection::vec(-9i64..=0, 1..=6)) {
        let complex = tensor_monoid_complex(&b).unwrap();
        let k = b.len();
        prop_assert!(complex.check_square_zero().is_ok());
        for p in 0..=k {
            prop_assert_eq!(complex.rank(p), binomial(k, p));
        }
    }

    #[test]
    fn tensor_matches_evans_homology(b in prop::collection::vec(-9i64..=9, 1..=4)) {
        let blocks: Vec<IntMatrix> = b.iter().map(|&v| IntMatrix::scalar(BigInt::from(v))).collect();
        let evans = homology(&evans_complex(&blocks).unwrap()).unwrap();
        let big: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
        let tensor = homology(&tensor_monoid_complex(&big).unwrap()).unwrap();
        prop_assert_eq!(evans, tensor);
    }

    #[test]
    fn tensoring_with_a_unit_kills_homology(b in prop::collection::vec(-9i64..=9, 1..=3), unit in prop::sample::select(vec![-1i64, 1])) {
        let base = tensor_monoid_complex(&b).unwrap();
        let complex = tensor_two(&base, &TwoTermComplex::new(unit));
        prop_assert!(homology(&complex).unwrap().iter().all(HomologyGroup::is_trivial));
    }

    #[test]
    fn divisors_survive_unimodular_change(
        entries in prop::collection::vec(-6i64..=6, 16),
        ops in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..12),
    ) {
        let m = IntMatrix::from_vec(4, 4, entries.into_iter().map(BigInt::from).collect());
        let mut u = IntMatrix::identity(4);
        let mut v = IntMatrix::identity(4);
        for (i, j, f) in ops {
            if i != j {
                u.add_row_multiple(i, j, &BigInt::from(f));
                v.add_col_multiple(j, i, &BigInt::from(-f));
            }
        }
        let changed = &(&u * &m) * &v;
        prop_assert_eq!(smith_normal_form(&m).divisors, smith_normal_form(&changed).divisors);
    }
}
