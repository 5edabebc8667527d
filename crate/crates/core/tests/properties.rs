use hypercx_core::diagnostics::conjugation_antihomomorphism_failure;
use hypercx_core::scan::CliffordSet;
use hypercx_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use std::sync::OnceLock;

fn tables() -> &'static [StructureConstants] {
    static TABLES: OnceLock<Vec<StructureConstants>> = OnceLock::new();
    TABLES.get_or_init(|| (0..=8).map(|n| build_level(n).unwrap()).collect())
}

fn table(n: u32) -> &'static StructureConstants {
    &tables()[n as usize]
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// A level in `0..=max` and a dense element there.
fn element(max: u32) -> impl Strategy<Value = Element> {
    (0..=max).prop_flat_map(|n| {
        let level = table(n).level();
        prop::collection::vec(rational(), level.dim()).prop_map(move |c| Element::from_coeffs(level, c).unwrap())
    })
}

fn pair_at(n: u32) -> impl Strategy<Value = (Element, Element)> {
    let level = table(n).level();
    let v = move || {
        prop::collection::vec(rational(), level.dim()).prop_map(move |c| Element::from_coeffs(level, c).unwrap())
    };
    (v(), v())
}

/// Elements with at most four nonzero coefficients, for the large levels.
fn sparse_element(n: u32) -> impl Strategy<Value = Element> {
    let level = table(n).level();
    prop::collection::vec((0..level.dim(), rational()), 1..=4).prop_map(move |terms| {
        let mut c = vec![BigRational::zero(); level.dim()];
        for (i, v) in terms {
            c[i] = v;
        }
        Element::from_coeffs(level, c).unwrap()
    })
}

fn sum_of_squares(x: &Element) -> BigRational {
    x.coeffs().iter().map(|c| c * c).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn basis_products_are_antisymmetric(n in 2u32..=8, a in 1usize..256, b in 1usize..256) {
        let t = table(n);
        let (i, j) = (a % t.dim(), b % t.dim());
        prop_assume!(i != 0 && j != 0 && i != j);
        prop_assert_eq!(t.product(i, j), -t.product(j, i));
        let k = usize::from(t.product(i, j).index);
        prop_assert_eq!(t.structure_constant(i, j, k), -t.structure_constant(j, i, k));
        prop_assert_eq!(t.structure_constant(i, j, k), -t.structure_constant(i, k, j));
    }

    #[test]
    fn one_is_a_two_sided_identity(y in element(6)) {
        let t = table(y.level().n());
        let one = Element::one(y.level());
        prop_assert_eq!(&multiply(t, &one, &y).unwrap(), &y);
        prop_assert_eq!(&multiply(t, &y, &one).unwrap(), &y);
    }

    #[test]
    fn conjugation_is_an_involution(y in element(6)) {
        let c = conjugate(&y);
        prop_assert_eq!(&conjugate(&c), &y);
        prop_assert_eq!(c.coeff(0), y.coeff(0));
    }

    #[test]
    fn norm_is_the_sum_of_squares(y in element(5)) {
        let t = table(y.level().n());
        let squares = sum_of_squares(&y);
        prop_assert_eq!(&norm(t, &y).unwrap(), &squares);
        prop_assert_eq!(&hypercx_core::element::norm_reversed(t, &y).unwrap(), &squares);
        prop_assert_eq!(&y.quadratic_norm(), &squares);
        prop_assert_eq!(squares > BigRational::zero(), !y.is_zero());
    }

    #[test]
    fn inverse_is_exact_up_to_octonions(y in element(3)) {
        prop_assume!(!y.is_zero());
        let t = table(y.level().n());
        let inv = inverse(t, &y).unwrap();
        prop_assert!(multiply(t, &y, &inv.value).unwrap().is_one());
        prop_assert!(multiply(t, &inv.value, &y).unwrap().is_one());
        prop_assert!(inv.is_two_sided());
    }

    #[test]
    fn matrices_act_like_multiplication(y in element(5), a in 1usize..32) {
        let t = table(y.level().n());
        prop_assume!(t.dim() > 1);
        let i = 1 + a % (t.dim() - 1);
        let e = Element::basis(y.level(), i);
        let left = left_mult_matrix(t, i).unwrap();
        let right = right_mult_matrix(t, i).unwrap();
        prop_assert_eq!(left.apply_element(&y), multiply(t, &e, &y).unwrap().coeffs().to_vec());
        prop_assert_eq!(right.apply_element(&y), multiply(t, &y, &e).unwrap().coeffs().to_vec());
    }

    #[test]
    fn matrices_act_like_multiplication_at_large_levels(
        (n, y) in (6u32..=8).prop_flat_map(|n| (Just(n), sparse_element(n))),
        a in 1usize..256,
    ) {
        let t = table(n);
        let i = 1 + a % (t.dim() - 1);
        let e = Element::basis(y.level(), i);
        prop_assert_eq!(left_mult_matrix(t, i).unwrap().apply_element(&y), multiply(t, &e, &y).unwrap().coeffs().to_vec());
        prop_assert_eq!(right_mult_matrix(t, i).unwrap().apply_element(&y), multiply(t, &y, &e).unwrap().coeffs().to_vec());
    }

    #[test]
    fn norm_composes_up_to_octonions((x, y) in (0u32..=3).prop_flat_map(pair_at)) {
        let t = table(x.level().n());
        let xy = multiply(t, &x, &y).unwrap();
        prop_assert_eq!(sum_of_squares(&xy), sum_of_squares(&x) * sum_of_squares(&y));
    }

    #[test]
    fn triplet_rotations_share_a_canonical_form(i in 1u16..100, j in 1u16..100, k in 1u16..100) {
        let t = Triplet::new(i, j, k);
        prop_assert_eq!(t, Triplet::new(j, k, i));
        prop_assert_eq!(t, Triplet::new(k, i, j));
        prop_assert_eq!(t.indices()[0], i.min(j).min(k));
        prop_assert_eq!(t.reversed().reversed(), t);
    }
}

#[test]
fn each_pair_has_exactly_one_product() {
    for t in tables() {
        let dim = t.dim();
        for i in 1..dim {
            for j in 1..dim {
                let nonzero = (1..dim).filter(|&k| t.structure_constant(i, j, k) != 0).count();
                assert_eq!(nonzero, usize::from(i != j), "level {} pair ({i},{j})", t.level().n());
            }
        }
    }
}

#[test]
fn restriction_reproduces_lower_levels() {
    for n in 1..=8 {
        for m in 0..n {
            assert_eq!(&table(n).restrict(m).unwrap(), table(m));
        }
    }
    assert!(table(2).restrict(3).is_err());
}

#[test]
fn triplet_tables_rebuild_the_structure_constants() {
    for n in 0..=8 {
        let t = table(n);
        let rebuilt = StructureConstants::from_triplets(t.level(), &enumerate_triplets(t).triplets).unwrap();
        assert_eq!(&rebuilt, t);
    }
    let level = table(3).level();
    assert!(StructureConstants::from_triplets(level, &[Triplet::new(1, 2, 3)]).is_err());
}

#[test]
fn conjugation_reverses_basis_products_up_to_octonions() {
    for n in 0..=3 {
        let t = table(n);
        assert_eq!(conjugation_antihomomorphism_failure(t), None);
        for i in 0..t.dim() {
            for j in 0..t.dim() {
                let e = |k| Element::basis(t.level(), k);
                let lhs = conjugate(&multiply(t, &e(i), &e(j)).unwrap());
                let rhs = multiply(t, &conjugate(&e(j)), &conjugate(&e(i))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn basis_norms_are_one() {
    for n in 0..=8 {
        let t = table(n);
        for i in 0..t.dim() {
            assert!(norm(t, &Element::basis(t.level(), i)).unwrap().is_one());
        }
    }
    let t = table(2);
    let y = Element::from_terms(t.level(), &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(norm(t, &y).unwrap(), BigRational::from_integer(5.into()));
}

#[test]
fn inverse_examples() {
    let t = table(3);
    let e1 = Element::basis(t.level(), 1);
    let inv = inverse(t, &e1).unwrap().value;
    assert_eq!(inv, -&e1);
    assert!(multiply(t, &e1, &inv).unwrap().is_one());

    let half = Element::one(t.level()).scale(&BigRational::new(1.into(), 2.into()));
    assert_eq!(inverse(t, &half).unwrap().value, Element::from_terms(t.level(), &[(0, 2)]).unwrap());
    assert!(matches!(inverse(t, &Element::zero(t.level())), Err(Error::Domain(_))));

    assert!(matches!(multiply(t, &e1, &Element::basis(table(2).level(), 1)), Err(Error::Usage(_))));
}

#[test]
fn multiplication_matrices_are_orthogonal_and_square_to_minus_one() {
    for t in &tables()[1..] {
        let id = SignedPermMatrix::identity(t.dim());
        for i in 1..t.dim() {
            for m in [left_mult_matrix(t, i).unwrap(), right_mult_matrix(t, i).unwrap()] {
                assert_eq!(m.mul(&m.transpose()).unwrap(), id);
                assert_eq!(m.mul(&m).unwrap().scalar_sign(), Some(-1));
                assert_eq!(anticommutator(&m, &m).unwrap(), IntMatrix::scalar(t.dim(), -2));
            }
        }
    }
}

#[test]
fn left_matrices_compose_only_while_associative() {
    let composes = |t: &StructureConstants, i: usize, j: usize| {
        let p = t.product(i, j);
        let target = if p.index == 0 {
            SignedPermMatrix::identity(t.dim())
        } else {
            left_mult_matrix(t, usize::from(p.index)).unwrap()
        };
        let target = if p.sign < 0 { target.negated() } else { target };
        left_mult_matrix(t, i).unwrap().mul(&left_mult_matrix(t, j).unwrap()).unwrap() == target
    };
    for n in 1..=2 {
        let t = table(n);
        for i in 1..t.dim() {
            for j in 1..t.dim() {
                assert!(composes(t, i, j), "level {n}: ({i},{j})");
            }
        }
    }
    let t3 = table(3);
    assert!((1..8).any(|i| (1..8).any(|j| !composes(t3, i, j))));
}

#[test]
fn failures_persist_at_higher_levels() {
    let budget = Budget { identity_samples: 20, random_pairs: 50, ..Budget::default() };
    for k in 3..=5 {
        let report = check_identities(table(k), &budget, DEFAULT_SEED);
        for check in &report.checks {
            let Some(w) = check.outcome.witness() else { continue };
            for up in k + 1..=8 {
                let t = table(up);
                let lift = |e: &Element| e.embed(t.level()).unwrap();
                let z = w.z.as_ref().map(lift).unwrap_or_else(|| Element::zero(t.level()));
                let (lhs, rhs) = check.identity.sides(t, &lift(&w.x), &lift(&w.y), &z).unwrap();
                assert_ne!(lhs, rhs, "{:?} from level {k} at level {up}", check.identity);
            }
        }
        if let Some(w) = report.norm_composition.witness() {
            for up in k + 1..=8 {
                let t = table(up);
                let x = w.x.embed(t.level()).unwrap();
                let y = w.y.embed(t.level()).unwrap();
                let xy = multiply(t, &x, &y).unwrap();
                assert_ne!(sum_of_squares(&xy), sum_of_squares(&x) * sum_of_squares(&y));
            }
        }
    }
    for w in find_zero_divisors(table(4)).iter().take(20) {
        for up in 5..=8 {
            let t = table(up);
            let xy = multiply(t, &w.x.embed(t.level()).unwrap(), &w.y.embed(t.level()).unwrap()).unwrap();
            assert!(xy.is_zero());
        }
    }
}

#[test]
fn volume_element_parity() {
    for n in 1..=4 {
        let t = table(n);
        let graph = anticommutation_graph(t).unwrap();
        let search = max_anticommuting_sets(&graph, u64::MAX);
        for clique in &search.cliques {
            // every prefix of a clique is itself a clique
            for k in 1..=clique.len() {
                let set = CliffordSet::verify(t, &clique[..k], Side::Left).unwrap();
                let r = extend_with_volume_element(t, &set).unwrap();
                assert!(r.square_sign.is_some());
                if k % 2 == 0 {
                    assert!(r.anticommutes_with_all, "level {n} set {:?}", &clique[..k]);
                } else {
                    assert!(r.commutes_with_all, "level {n} set {:?}", &clique[..k]);
                }
            }
        }
    }
}

#[test]
fn division_levels_have_no_zero_divisors() {
    for n in 0..=3 {
        assert!(find_zero_divisors(table(n)).is_empty());
    }
    let found = find_zero_divisors(table(4));
    assert!(!found.is_empty());
    assert!(found.iter().all(|w| w.reverify(table(4)).unwrap()));
}
