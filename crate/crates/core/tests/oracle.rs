use num_bigint::BigInt;
use num_rational::BigRational;
use thrall_core::shapes::enumerate_partitions;
use thrall_core::symfunc::{
    h_in_p, higher_lie_character, lie_character_kw, multiply, p_to_schur, plethysm, schur_to_p, SymFunc,
};
use thrall_core::Partition;

/// `ch(L_(n,n))` splits into the symmetric square part and half the remaining square.
#[test]
fn two_equal_rows_identity() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    for n in 1..=5 {
        let lie = lie_character_kw(n);
        let lie_p = lie.to_p();
        let mut sym = SymFunc::zero(2 * n);
        let mut diag = SymFunc::zero(2 * n);
        for (lambda, a) in lie.iter() {
            let s = schur_to_p(lambda);
            let a = BigRational::from_integer(a.into());
            sym = &sym + &plethysm(&h_in_p(2), &s).scale(&a);
            diag = &diag + &multiply(&s, &s).scale(&a);
        }
        let rhs = &sym + &(&multiply(&lie_p, &lie_p) - &diag).scale(&half);
        let expected = higher_lie_character(&Partition::new(vec![n, n]).unwrap()).unwrap();
        assert_eq!(p_to_schur(&rhs).unwrap(), expected, "n = {n}");
    }
}

#[test]
fn characters_are_genuine() {
    for n in 0..=7 {
        for lambda in enumerate_partitions(n) {
            let e = higher_lie_character(&lambda).unwrap();
            assert!(e.has_nonnegative_coefficients(), "{lambda}: {e}");
            assert!(!e.is_zero() || n == 0);
        }
    }
    assert_eq!(higher_lie_character(&Partition::empty()).unwrap().to_string(), "1");
}

#[test]
fn one_column_is_the_trivial_character() {
    for n in 1..=6 {
        let e = higher_lie_character(&Partition::column(n)).unwrap();
        assert_eq!(e.to_string(), format!("s_{{{n}}}"));
    }
}
