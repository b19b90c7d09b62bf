use sigmak_core::boundary::{self, lemma3_closed_forms, lemma3_printed_forms, Lemma3};
use sigmak_core::{BoundaryGeometry, Rational};

fn kappas() -> [Rational; 3] {
    [Rational::from(1), Rational::from(2), Rational::ratio(1, 3)]
}

#[test]
fn closed_forms_match_tuple_enumeration() {
    for which in [Lemma3::RemovePositive, Lemma3::RemoveNegative] {
        for m in 2..=6u64 {
            for n in 2..=6u64 {
                for kappa in kappas() {
                    let closed = lemma3_closed_forms(which, m, n, &kappa).unwrap();
                    let direct = boundary::lemma3_oracle(which, m, n, &kappa).unwrap();
                    assert_eq!(closed.len(), direct.len());
                    for (key, value) in &closed {
                        let expected = direct.get(key).unwrap_or_else(|| panic!("{key} missing"));
                        assert_eq!(value, expected, "{which:?} m={m} n={n} kappa={kappa} {key}");
                    }
                }
            }
        }
    }
}

#[test]
fn typeset_forms_differ_only_where_expected() {
    // T_{3,2} as typeset is twice the true value; sigma_{6,1} and sigma_{4,3}
    // lose the (-1)^l sign when the negative eigenvalue is removed
    let kappa = Rational::ratio(3, 2);
    for (m, n) in [(3u64, 5u64), (6, 4), (715, 806)] {
        let closed = lemma3_closed_forms(Lemma3::RemovePositive, m, n, &kappa).unwrap();
        let printed = lemma3_printed_forms(Lemma3::RemovePositive, m, n, &kappa).unwrap();
        let two = Rational::from(2);
        assert_eq!(printed["T_{3,2}[I_n]"], &two * &closed["T_{3,2}[hyperbolic]"]);
        assert_eq!(printed["T_{3,2}[I_m]"], &two * &closed["T_{3,2}[sphere-boundary]"]);
        assert_eq!(printed["T_{4,1}[I_n]"], closed["T_{4,1}[hyperbolic]"]);
        assert_eq!(printed["T_{4,1}[I_m]"], closed["T_{4,1}[sphere-boundary]"]);
        for key in ["sigma_{6,1}", "sigma_{5,2}", "sigma_{4,3}"] {
            assert_eq!(printed[key], closed[key], "{key}");
        }

        let closed = lemma3_closed_forms(Lemma3::RemoveNegative, m, n, &kappa).unwrap();
        let printed = lemma3_printed_forms(Lemma3::RemoveNegative, m, n, &kappa).unwrap();
        assert_eq!(printed["sigma_{6,1}"], -&closed["sigma_{6,1}"]);
        assert_eq!(printed["sigma_{5,2}"], closed["sigma_{5,2}"]);
        assert_eq!(printed["sigma_{4,3}"], -&closed["sigma_{4,3}"]);
        // here the first printed coefficient belongs to the curved block
        assert_eq!(printed["T_{3,2}[I_n]"], &two * &closed["T_{3,2}[ball-boundary]"]);
        assert_eq!(printed["T_{3,2}[I_m]"], &two * &closed["T_{3,2}[sphere]"]);
        assert_eq!(printed["T_{4,1}[I_n]"], closed["T_{4,1}[ball-boundary]"]);
        assert_eq!(printed["T_{4,1}[I_m]"], closed["T_{4,1}[sphere]"]);
    }
}

#[test]
fn boundary_blocks_at_the_paper_pair_are_positive() {
    for g in [BoundaryGeometry::Cap, BoundaryGeometry::Ball] {
        let h4 = boundary::h4_polynomial(g, 806, 715).unwrap();
        let s3 = boundary::s3_polynomial_blocks(g, 806, 715).unwrap();
        assert!(h4.all_coefficients_positive());
        for kappa in
            [Rational::ratio(1, 10), Rational::ratio(1, 2), Rational::from(1), Rational::from(2), Rational::from(10)]
        {
            assert!(h4.eval(&kappa).is_positive());
            for (label, poly) in &s3.blocks {
                assert!(poly.eval(&kappa).is_positive(), "{g:?} {label} at {kappa}");
            }
        }
    }
}
