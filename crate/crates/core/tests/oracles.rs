//! Worked values, each computed independently by hand.

use num_traits::One;
use qknot::acurve::{a_candidate, clasp_units, hs_recursion_check, monomial_equiv};
use qknot::cpoly::{cpoly_closed, nc_backward_coeff, nc_cpoly, CoeffMatrix};
use qknot::cyclotomic::{
    alexander_twist, block_coeff, colored_jones_twist, cyclotomic_twist, eval_q1, genfun_check,
    inv_q_pochhammer, q_binomial, q_pochhammer,
};
use qknot::exact::resultant;
use qknot::names::{E, L, M, Q, SMALL_Q};
use qknot::qweyl::op_reverse;
use qknot::telescope::{explicit_apparatus, telescoped_operator};
use qknot::{LaurentPoly, Rational, RationalFunction, WeylOp};

fn v(name: &str) -> LaurentPoly {
    LaurentPoly::var(name)
}

fn one() -> LaurentPoly {
    LaurentPoly::one()
}

fn q(e: i32) -> LaurentPoly {
    LaurentPoly::monomial(&[(SMALL_Q, e)], Rational::one())
}

#[test]
fn q_factorials() {
    assert!(q_pochhammer(1, 0).unwrap().is_one());
    assert!(inv_q_pochhammer(1, -1).unwrap().is_zero());
    assert!(q_binomial(3, -1).is_zero());
}

#[test]
fn block_coefficients() {
    assert!(block_coeff(1, 1).unwrap().is_zero());
    assert_eq!(block_coeff(2, 1).unwrap(), q(-1) + one() + q(1));
}

#[test]
fn cyclotomic_values() {
    for n in 0..6 {
        let want = if n == 0 { one() } else { LaurentPoly::zero() };
        assert_eq!(cyclotomic_twist(0, n).unwrap().value, want);
    }
    for p in -4..=4 {
        assert!(cyclotomic_twist(p, 0).unwrap().value.is_one());
    }
    assert_eq!(cyclotomic_twist(1, 1).unwrap().value, -q(2));
}

#[test]
fn colored_jones_values() {
    for n in 1..5 {
        assert!(colored_jones_twist(0, n).unwrap().is_one());
    }
    for p in -3..=3 {
        assert!(colored_jones_twist(p, 1).unwrap().is_one());
    }
    assert_eq!(
        colored_jones_twist(1, 2).unwrap(),
        one() - q(1) - q(2) - q(3)
    );
}

#[test]
fn values_at_one() {
    for n in 0..8 {
        let i1 = eval_q1(1, n).unwrap();
        assert_eq!(
            i1,
            Rational::from_integer(if n % 2 == 0 { 1.into() } else { (-1).into() })
        );
        assert_eq!(
            eval_q1(0, n).unwrap(),
            Rational::from_integer(i64::from(n == 0).into())
        );
    }
    assert!(alexander_twist(0).is_one());
    assert_eq!(alexander_twist(1), v(M) - one() + v(M).pow_i(-1));
    assert!(genfun_check(1, 6).unwrap());
    assert!(genfun_check(-3, 8).unwrap());
}

#[test]
fn weyl_relations() {
    let e = WeylOp::e();
    let qq = WeylOp::scalar(RationalFunction::var(Q));
    let lhs = &e * &qq;
    let rhs = WeylOp::monomial(1, RationalFunction::from_poly(v(Q) * q(1)));
    assert_eq!(lhs, rhs);
    let alpha = RationalFunction::new(one(), one() - v(Q)).unwrap();
    let lhs = &e * &WeylOp::scalar(alpha);
    let want = RationalFunction::new(one(), one() - v(Q) * q(1)).unwrap();
    assert_eq!(lhs, WeylOp::monomial(1, want));
}

#[test]
fn c_polynomials() {
    assert_eq!(nc_cpoly(1).poly(), v(E) + q(2) * v(Q));
    assert_eq!(nc_cpoly(-1).poly(), v(E) - one());
    let c2 = nc_cpoly(2).poly();
    let e0 = c2.coeffs_in(E)[&0].clone();
    assert_eq!(e0, q(6) * v(Q).pow(2) - q(7) * v(Q).pow(3));
    assert_eq!(cpoly_closed(1).poly, v(Q) + v(E));
    assert_eq!(cpoly_closed(-1).poly, v(E) - one());
    let (e, qq) = (v(E), v(Q));
    let want = e.pow(2)
        + &qq * &(LaurentPoly::from_int(2) - &qq + qq.pow(2)) * &e
        + qq.pow(2) * (one() - &qq);
    assert_eq!(cpoly_closed(2).poly, want);
    assert!(cpoly_closed(0).poly.is_one());
    assert_eq!(op_reverse(&(v(Q) + v(E))), one() + v(Q) * v(E));
}

#[test]
fn three_term_instances() {
    let (e, qq) = (v(E), v(Q));
    let x = &qq - qq.pow(2) + &e + qq.pow(2) * &e;
    assert_eq!(
        &x * &(&qq + &e) - qq.pow(2) * e.pow(2),
        cpoly_closed(2).poly
    );
    let qm2 = qq.pow_i(-2);
    assert_eq!(
        &x * &qm2 * (&e - one()) - e.pow(2) * &qm2,
        cpoly_closed(-2).poly
    );
    let d2 = (&qq * &e - qq.pow(2) * (&e - one()) + one()) * (one() + &qq * &e) - qq.pow(2);
    assert_eq!(d2, op_reverse(&cpoly_closed(2).poly));
}

#[test]
fn backward_coefficient() {
    assert_eq!(
        nc_backward_coeff(1, 1).unwrap(),
        RationalFunction::from_poly(q(1) * v(Q))
    );
}

#[test]
fn coefficient_tables() {
    let t = CoeffMatrix::from_poly(1, &nc_cpoly(1).poly());
    assert_eq!(t.cell(0, 1), q(2));
    assert!(t.cell(1, 0).is_one());
    let t = CoeffMatrix::from_poly(-2, &nc_cpoly(-2).poly());
    assert_eq!(t.cell(1, -2), -q(-4));
    assert_eq!(t.cell(1, -1), q(-2));
    assert_eq!(t.cell(1, 0), -q(-1) - one());
    let t = CoeffMatrix::from_poly(3, &nc_cpoly(3).poly());
    assert_eq!(t.cell(2, 1), q(4) + q(5) + q(6));
}

#[test]
fn homogenization() {
    let a = [
        RationalFunction::from_poly(q(2) * v(Q)),
        RationalFunction::one(),
    ];
    assert_eq!(
        telescoped_operator(&a, None).unwrap().to_poly().unwrap(),
        v(E) + q(2) * v(Q)
    );
    let r = RationalFunction::new(one(), one() - v(Q)).unwrap();
    let op = telescoped_operator(&[RationalFunction::one()], Some(&r)).unwrap();
    let want = WeylOp::from_coeffs(vec![
        -RationalFunction::from_poly(one() - v(Q)),
        RationalFunction::from_poly(one() - q(1) * v(Q)),
    ]);
    assert_eq!(op, want);
}

#[test]
fn explicit_certificates() {
    for p in [1, 2, -1, -2] {
        assert!(explicit_apparatus(p).unwrap().passed(), "p = {p}");
    }
}

#[test]
fn resultant_linear_root() {
    let (e, m, qq) = (v(E), v(M), v(Q));
    let g = &e * &m * &qq - m.pow(2) * &qq - &qq + qq.pow(2) * &m + &m;
    let r = resultant(&(&m - &qq), &g, M).unwrap();
    assert!(r == &e * &qq.pow(2) || r == -(&e * &qq.pow(2)));
}

#[test]
fn a_polynomials() {
    assert_eq!(a_candidate(1).unwrap().poly, v(L) + v(M).pow(3));
    assert!(a_candidate(0).unwrap().poly.is_one());
    let (l, m) = (v(L), v(M));
    let fig8 = &l * &(one() - &m - LaurentPoly::from_int(2) * m.pow(2) - m.pow(3) + m.pow(4))
        - m.pow(2)
        - l.pow(2) * m.pow(2);
    let a = a_candidate(-1).unwrap().poly;
    assert!(a == fig8 || a == -fig8);
    assert!(hs_recursion_check(3, 6).unwrap());
    assert!(hs_recursion_check(-6, -3).unwrap());
    let u = clasp_units();
    assert!(!monomial_equiv(
        &(one() + v(Q) * v(E)),
        &(one() + v(Q).pow(2) * v(E)),
        &u
    ));
}
