//! Property tests for the exact arithmetic layers and the matrix power
//! structure, plus the negative-index consistency sweep.

use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

use bpfib::genmatrix::{mat_pow, mat_qq, qq_pow_closed};
use bpfib::sequences::{bp_fib, bp_fib_poly, parity_eps, ParamSet};
use bpfib::{Mat2, Poly, QuadExt, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..1_000_000, 1i64..1000)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()).expect("d > 0"))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-50i64..50, 1i64..8), 0..6).prop_map(|coeffs| {
        Poly::from_coeffs(
            coeffs
                .into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()).expect("d > 0"))
                .collect(),
        )
    })
}

fn assert_canonical(r: &Rational) {
    assert!(r.denominator().is_positive(), "denominator must be positive");
    assert!(
        r.numerator().gcd(r.denominator()).is_one(),
        "fraction must be reduced: {r}"
    );
    if r.is_zero() {
        assert!(r.denominator().is_one(), "zero must be 0/1");
    }
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        for value in [&a + &b, &a - &b, &a * &b, -&a] {
            assert_canonical(&value);
        }
    }

    #[test]
    fn rational_division_round_trips(a in rational(), b in nonzero_rational()) {
        let q = &a / &b;
        assert_canonical(&q);
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn rational_text_round_trips(a in rational()) {
        let back: Rational = a.to_string().parse().expect("own display must parse");
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rational_order_matches_subtraction(a in rational(), b in rational()) {
        prop_assert_eq!(a < b, (&a - &b).is_negative());
    }

    #[test]
    fn quadext_inverse_round_trips(
        u in rational(),
        v in rational(),
        d_index in 0usize..4,
    ) {
        // Radicands cover a square, a non-square, a negative, and 60 from
        // the worked examples.
        let radicands = [4i64, 60, -3, 9];
        let d = Rational::from(radicands[d_index]);
        let z = QuadExt::new(u, v, d.clone());
        let one = QuadExt::from_rational(Rational::one(), &d);
        if z.norm().is_zero() {
            prop_assert!(z.inv().is_err());
        } else {
            let inv = z.inv().expect("nonzero norm");
            prop_assert_eq!(z.checked_mul(&inv).expect("same radicand"), one);
        }
    }

    #[test]
    fn quadext_embeds_rationals(a in rational(), b in rational()) {
        let d = Rational::from(60);
        let ea = QuadExt::from_rational(a.clone(), &d);
        let eb = QuadExt::from_rational(b.clone(), &d);
        prop_assert_eq!(ea.checked_add(&eb).expect("same radicand"),
            QuadExt::from_rational(&a + &b, &d));
        prop_assert_eq!(ea.checked_mul(&eb).expect("same radicand"),
            QuadExt::from_rational(&a * &b, &d));
    }

    #[test]
    fn poly_eval_is_ring_homomorphism(p in small_poly(), q in small_poly(), x in rational()) {
        prop_assert_eq!((&p * &q).eval(&x), &p.eval(&x) * &q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), &p.eval(&x) + &q.eval(&x));
    }

    #[test]
    fn matrix_power_group_law(
        a in -4i64..=4, b in -4i64..=4,
        m in -8i64..=8, n in -8i64..=8,
    ) {
        prop_assume!(a != 0 && b != 0);
        let p = ParamSet::from_i64(a, b).expect("nonzero");
        let q = mat_qq(&p, &Rational::one());
        let lhs = mat_pow(&q, m + n).expect("invertible");
        let rhs = mat_pow(&q, m).expect("invertible")
            .mul(&mat_pow(&q, n).expect("invertible"));
        prop_assert_eq!(lhs, rhs);
    }
}

/// The positive-index closed-form pattern extends verbatim to negative
/// exponents once `q_{-n} = (-1)^{n+1} q_n` is adopted: a third route to
/// the inverse powers, independent of the dedicated inverse-power shape.
#[test]
fn negative_index_rule_matches_matrix_powers() {
    let half = Rational::new(1.into(), 2.into()).unwrap();
    let one = Rational::one();
    let values = [
        Rational::from(1),
        Rational::from(2),
        Rational::from(3),
        half,
        Rational::from(-1),
    ];
    for a in &values {
        for b in &values {
            let p = ParamSet::new(a.clone(), b.clone()).unwrap();
            let q = mat_qq(&p, &one);
            let ratio = p.ratio_ba();
            for n in 1..=30i64 {
                let k = -n;
                let eps = parity_eps(k);
                let scale = ratio.pow(k.div_euclid(2));
                let corner = ratio.pow(eps);
                let pattern = Mat2::new(
                    &(&scale * &corner) * &bp_fib(k + 1, &p),
                    &(&scale * &ratio) * &bp_fib(k, &p),
                    &scale * &bp_fib(k, &p),
                    &(&scale * &corner) * &bp_fib(k - 1, &p),
                );
                let direct = mat_pow(&q, k).unwrap();
                assert_eq!(pattern, direct, "a={a} b={b} n={n}");
                assert_eq!(qq_pow_closed(k, &p, &one), direct, "a={a} b={b} n={n}");
            }
        }
    }
}

/// Doubling through the addition law reproduces binary exponentiation:
/// the forward formula at m = n halves the index chain.
#[test]
fn addition_law_doubles() {
    for (a, b) in [(1i64, 1i64), (2, 3), (-1, 2), (3, 1)] {
        let p = ParamSet::from_i64(a, b).unwrap();
        for n in 1..=25i64 {
            let doubled = bpfib::sequences::fib_add(n, n, &p).unwrap();
            assert_eq!(doubled, bp_fib(2 * n, &p), "a={a} b={b} n={n}");
        }
    }
}

#[test]
fn polynomial_specializes_to_numbers() {
    let half = Rational::new(1.into(), 2.into()).unwrap();
    let one = Rational::one();
    let values = [
        Rational::from(1),
        Rational::from(2),
        Rational::from(3),
        half,
        Rational::from(-1),
    ];
    for a in &values {
        for b in &values {
            let p = ParamSet::new(a.clone(), b.clone()).unwrap();
            for n in 0..=60u64 {
                assert_eq!(
                    bp_fib_poly(n, &p).eval(&one),
                    bp_fib(n as i64, &p),
                    "a={a} b={b} n={n}"
                );
            }
        }
    }
}
