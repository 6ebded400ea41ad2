use num_traits::{One, Zero};
use proptest::prelude::*;
use whakit_core::scalar::cyclotomic_polynomial;
use whakit_core::{Field, FieldDesc, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Scalar::rational(n, d))
}

/// An element of Q(w) for w of order `order`, as a random polynomial in w.
fn cyclotomic(order: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-9i64..9, 1i64..5), 1..order as usize + 2).prop_map(move |cs| {
        cs.iter().enumerate().fold(Scalar::int(0), |acc, (k, (n, d))| {
            acc + &(Scalar::rational(*n, *d) * &Scalar::root_of_unity(order, k as i64))
        })
    })
}

fn any_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![rational(), cyclotomic(3), cyclotomic(4), cyclotomic(5), cyclotomic(12)]
}

fn field_axioms(a: Scalar, b: Scalar, c: Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.clone() + &b, b.clone() + &a);
    prop_assert_eq!(a.clone() * &b, b.clone() * &a);
    prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
    prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
    prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
    prop_assert_eq!(a.clone() + &Scalar::zero(), a.clone());
    prop_assert_eq!(a.clone() * &Scalar::one(), a.clone());
    prop_assert!((a.clone() + &(-a.clone())).is_zero());
    match a.inv() {
        Some(i) => prop_assert!((a * &i).is_one()),
        None => prop_assert!(a.is_zero()),
    }
    Ok(())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn cyclotomic_field_axioms(a in cyclotomic(5), b in cyclotomic(5), c in cyclotomic(5)) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn mixed_rational_and_cyclotomic(a in rational(), b in cyclotomic(7), c in cyclotomic(7)) {
        field_axioms(a, b, c)?;
    }

    #[test]
    fn inverse_is_two_sided(a in cyclotomic(12)) {
        prop_assume!(!a.is_zero());
        let i = a.try_inv().unwrap();
        prop_assert!((i.clone() * &a).is_one());
        prop_assert_eq!(i.try_inv().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_then_parse_is_identity(a in any_scalar()) {
        let field = match a.field() {
            FieldDesc::Rational => FieldDesc::Cyclotomic { order: 12 },
            f => f,
        };
        prop_assert_eq!(Scalar::parse(&a.render(), field).unwrap(), a.clone());
        if a.field() == FieldDesc::Rational {
            prop_assert_eq!(Scalar::parse(&a.render(), FieldDesc::Rational).unwrap(), a);
        }
    }
}

#[test]
fn primitive_roots_have_exact_order() {
    for n in 1..=24u32 {
        let w = Scalar::root_of_unity(n, 1);
        assert!(w.pow(n).is_one(), "w^{n} = 1 for order {n}");
        for k in 1..n {
            assert!(!w.pow(k).is_one(), "w^{k} != 1 for order {n}");
        }
    }
}

#[test]
fn cyclotomic_polynomials_divide_x_n_minus_one() {
    // Oracle: Φ_n is the primitive part of x^n - 1; checking Φ_n(w) = 0
    // and deg Φ_n = φ(n) by counting units mod n.
    for n in 1..=24u32 {
        let phi = cyclotomic_polynomial(n);
        let units = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
        assert_eq!(phi.len() - 1, units, "degree of Φ_{n}");
        let w = Scalar::root_of_unity(n, 1);
        let value = phi.iter().enumerate().fold(Scalar::zero(), |acc, (k, c)| {
            acc + &(Scalar::int(i64::try_from(c.clone()).unwrap()) * &w.pow(k as u32))
        });
        assert!(value.is_zero(), "Φ_{n}(w) = 0");
    }
}
