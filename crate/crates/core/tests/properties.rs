use proptest::prelude::*;

use tlschur::combinatorics::{decomposition_matrix, DecompTable};
use tlschur::domdim::ExtendedNat;
use tlschur::hecke::{phi, BlessedConfig, HeckeElement};
use tlschur::hook::Silent;
use tlschur::linalg::{kernel_basis, solve, Field, Matrix};
use tlschur::oracle::{hom_space, minimal_left_approximation, SchurOracle};
use tlschur::tensor::{hecke_element_action, tl_word_action};
use tlschur::{Rationals, GF2, GF5};

fn matrix_entries(modulus: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..8, 1usize..8).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(0..modulus, c), r)
    })
}

fn rank_nullity<F: Field>(field: &F, rows: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let m = Matrix::from_i64_rows(field, rows);
    let kernel = kernel_basis(&m);
    prop_assert_eq!(m.rank() + kernel.len(), m.cols());
    for v in &kernel {
        prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| field.is_zero(x)));
    }
    prop_assert_eq!(m.transpose().rank(), m.rank());
    let b = m.column(0);
    let x = solve(&m, &b).unwrap().expect("a column is in the column space");
    prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    Ok(())
}

proptest! {
    #[test]
    fn rank_nullity_gf2(rows in matrix_entries(2)) {
        rank_nullity(&GF2, &rows)?;
    }

    #[test]
    fn rank_nullity_gf5(rows in matrix_entries(5)) {
        rank_nullity(&GF5, &rows)?;
    }

    #[test]
    fn rank_nullity_rationals(rows in matrix_entries(7)) {
        let shifted: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x - 3).collect()).collect();
        rank_nullity(&Rationals, &shifted)?;
    }

    #[test]
    fn decomposition_tables_round_trip(half in 0usize..40) {
        let table = decomposition_matrix(2 * half).unwrap();
        prop_assert_eq!(&DecompTable::from_csv(&table.to_csv()).unwrap(), &table);
        prop_assert_eq!(&DecompTable::from_json(&table.to_json()).unwrap(), &table);
    }

    #[test]
    fn extended_naturals_round_trip(n in -5i64..100, infinite in any::<bool>()) {
        let x = if infinite { ExtendedNat::Infinite } else { ExtendedNat::Finite(n) };
        let text = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExtendedNat>(&text).unwrap(), x);
        prop_assert!(ExtendedNat::Finite(n) < ExtendedNat::Infinite);
    }

    #[test]
    fn hecke_action_is_multiplicative(
        cfg in prop::sample::select(BlessedConfig::ALL.to_vec()),
        left in proptest::collection::vec(1usize..4, 0..5),
        right in proptest::collection::vec(1usize..4, 0..5),
    ) {
        let params = cfg.params(4);
        let a = HeckeElement::word(&params, &left).unwrap();
        let b = HeckeElement::word(&params, &right).unwrap();
        let ab = a.mul(&b).unwrap();
        let lhs = hecke_element_action(&ab).unwrap();
        let rhs = hecke_element_action(&a).unwrap().then(&hecke_element_action(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
        prop_assert_eq!(phi(&ab).unwrap(), phi(&a).unwrap().mul(&phi(&b).unwrap()).unwrap());
    }

    #[test]
    fn tl_words_act_like_their_diagrams(
        cfg in prop::sample::select(BlessedConfig::ALL.to_vec()),
        word in proptest::collection::vec(1usize..4, 0..6),
    ) {
        let params = cfg.params(4);
        let mut expected = hecke_element_action(&HeckeElement::one(&params)).unwrap();
        for &i in &word {
            expected = expected.then(&tl_word_action(&params, &[i]).unwrap()).unwrap();
        }
        let action = tl_word_action(&params, &word).unwrap();
        prop_assert_eq!(action.matrix(), expected.matrix());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn approximations_are_module_maps(
        cfg in prop::sample::select(BlessedConfig::ALL.to_vec()),
        seed in proptest::collection::vec(0u32..2, 16),
    ) {
        let o = SchurOracle::new(&cfg.params(4), &Silent).unwrap();
        let (m, inclusion) = o.tensor_space().cyclic_submodule(&[seed]).unwrap();
        prop_assert!(m.validate().unwrap());
        prop_assert!(inclusion.intertwines(&m, o.tensor_space()).unwrap());
        for h in hom_space(&m, o.tensor_space(), &Silent).unwrap() {
            prop_assert!(h.intertwines(&m, o.tensor_space()).unwrap());
        }
        let approx = minimal_left_approximation(&m, o.tensor_summands(), &Silent).unwrap();
        prop_assert!(approx.map.intertwines(&m, &approx.target).unwrap());
        if m.dim() > 0 {
            prop_assert!(approx.map.is_injective());
        }
    }
}
