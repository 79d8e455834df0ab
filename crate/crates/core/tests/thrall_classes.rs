use std::collections::BTreeSet;

use thrall_core::shapes::enumerate_partitions;
use thrall_core::symfunc::{lie_character_kw, multiply, p_to_schur, SymFunc};
use thrall_core::thrall::{
    classify, compare_unsolved, composite_pieces, expansion_from_tableaux, product_subset, syt_lambda,
    thrall_subset, verify, SolvedClass,
};
use thrall_core::{Error, Partition, StandardTableau};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Tableaux whose every piece lies in its subset already satisfy the block conditions of `λ`.
#[test]
fn composite_subset_is_within_block_class() {
    for n in 1..=8 {
        for lambda in enumerate_partitions(n) {
            if composite_pieces(&lambda).is_none() {
                continue;
            }
            for mu in enumerate_partitions(n) {
                let product: BTreeSet<StandardTableau> = product_subset(&lambda, &mu).unwrap().into_iter().collect();
                let block: BTreeSet<StandardTableau> = syt_lambda(&lambda, &mu).unwrap().into_iter().collect();
                assert!(product.is_subset(&block), "{lambda} {mu}");
            }
        }
    }
}

/// The row characters multiply to the block-class counts.
#[test]
fn row_product_counts_block_class() {
    for n in 1..=6 {
        for lambda in enumerate_partitions(n) {
            let product = lambda
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &p| multiply(&acc, &lie_character_kw(p).to_p()));
            let product = p_to_schur(&product).unwrap();
            for mu in enumerate_partitions(n) {
                assert_eq!(product.coefficient(&mu), syt_lambda(&lambda, &mu).unwrap().len() as i64);
            }
        }
    }
}

#[test]
fn paper_scale_examples() {
    for lambda in ["4,2", "3,3", "4,4", "5,5", "3,3,2,2,1", "4,4,1", "2,2,2,1,1"] {
        let reports = verify(&part(lambda)).unwrap();
        assert!(reports.iter().all(|r| r.matched), "{lambda}");
    }
}

#[test]
fn unsolved_class_is_reported() {
    let lambda = part("3,3,3");
    assert!(matches!(classify(&lambda), Err(Error::UnsolvedClass(_))));
    assert!(matches!(expansion_from_tableaux(&lambda), Err(Error::UnsolvedClass(_))));
    assert!(matches!(verify(&lambda), Err(Error::UnsolvedClass(_))));
    let rows = compare_unsolved(&lambda).unwrap();
    assert_eq!(rows.len(), enumerate_partitions(9).len());
    assert!(rows.iter().all(|(_, c, count)| *c <= *count as i64));
}

#[test]
fn hook_class_descents() {
    let lambda = part("3,1,1,1");
    assert_eq!(classify(&lambda).unwrap(), SolvedClass::Hook { arm: 3 });
    for mu in enumerate_partitions(6) {
        for t in thrall_subset(&lambda, &mu).unwrap() {
            assert!(t.descent_set().iter().all(|&d| d <= 3));
        }
    }
}

#[test]
fn two_columns_have_even_columns() {
    for n in 1..=4 {
        let e = expansion_from_tableaux(&Partition::new(vec![2; n]).unwrap()).unwrap();
        for (mu, c) in e.iter() {
            assert_eq!(c, 1);
            assert!(mu.conjugate().parts().iter().all(|l| l % 2 == 0), "{mu}");
        }
    }
}
