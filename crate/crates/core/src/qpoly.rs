//! Dense polynomials in one indeterminate `q` with exact rational
//! coefficients. The zero polynomial is the empty coefficient list; any
//! nonzero polynomial stores a nonzero leading coefficient, so
//! `deg(p*r) = deg(p) + deg(r)` holds exactly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{parse_rat, rat_int, rat_to_string, Int, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    /// Ascending degree; empty means zero; last entry nonzero otherwise.
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(rat_int(1))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::from_coeffs(vec![Rat::zero(), rat_int(1)])
    }

    pub fn constant(c: Rat) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn from_int(v: i64) -> Self {
        QPoly::constant(rat_int(v))
    }

    pub fn from_integer(v: Int) -> Self {
        QPoly::constant(Rat::from_integer(v))
    }

    /// Normalizes: strips trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending integer coefficients, handy in tests: `[1, 3, 1]` is `1 + 3q + q^2`.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value of a constant polynomial; `None` when degree >= 1.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// True iff every coefficient is nonnegative (the zero polynomial counts).
    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First index with a negative coefficient, if any.
    pub fn first_negative_coeff(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    /// `self >= other` in the coefficientwise order: the difference has
    /// nonnegative coefficients.
    pub fn geq_q(&self, other: &QPoly) -> bool {
        (self - other).is_nonneg()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, exp: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in the polynomial ring: returns `r` with `r * d = self`.
    /// Errors if `d` is zero or does not divide exactly.
    pub fn exact_div(&self, d: &QPoly) -> Result<QPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let d_deg = d.coeffs.len() - 1;
        let s_deg = self.coeffs.len() - 1;
        if s_deg < d_deg {
            return Err(Error::NonExactDivision);
        }
        let lead = &d.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); s_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d_deg] / lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    let t = dj * &c;
                    rem[i + j] = &rem[i + j] - &t;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let unit = a == rat_int(1);
            match k {
                0 => write!(f, "{}", rat_to_string(&a))?,
                1 => {
                    if unit {
                        write!(f, "q")?;
                    } else {
                        write!(f, "{}q", rat_to_string(&a))?;
                    }
                }
                _ => {
                    if unit {
                        write!(f, "q^{k}")?;
                    } else {
                        write!(f, "{}q^{k}", rat_to_string(&a))?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly { (&self).$method(&rhs) }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly { (&self).$method(rhs) }
        }
        impl $trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly { self.$method(&rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

/// One coefficient rendered for reports: a JSON integer when it fits in
/// `i64`, otherwise a decimal or `p/q` string. Never a float.
pub fn coeff_to_json(c: &Rat) -> serde_json::Value {
    if c.is_integer() {
        if let Some(v) = c.numer().to_i64() {
            return serde_json::Value::from(v);
        }
    }
    serde_json::Value::from(rat_to_string(c))
}

fn coeff_from_json(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(rat_int(i))
            } else {
                Err(Error::InvalidInput(format!(
                    "coefficient {n} is not an exact integer"
                )))
            }
        }
        serde_json::Value::String(s) => {
            parse_rat(s).ok_or_else(|| Error::InvalidInput(format!("bad rational `{s}`")))
        }
        other => Err(Error::InvalidInput(format!(
            "coefficient must be an integer or \"p/q\" string, got {other}"
        ))),
    }
}

/// Parse a report-format term: a bare integer (constant polynomial), a
/// "p/q" string, or an ascending coefficient array.
pub fn qpoly_from_json(v: &serde_json::Value) -> Result<QPoly> {
    match v {
        serde_json::Value::Array(items) => {
            let coeffs = items.iter().map(coeff_from_json).collect::<Result<_>>()?;
            Ok(QPoly::from_coeffs(coeffs))
        }
        _ => Ok(QPoly::constant(coeff_from_json(v)?)),
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&coeff_to_json(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct CoeffsVisitor;
        impl<'de> Visitor<'de> for CoeffsVisitor {
            type Value = QPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an ascending coefficient array")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<QPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    coeffs.push(coeff_from_json(&v).map_err(de::Error::custom)?);
                }
                Ok(QPoly::from_coeffs(coeffs))
            }
        }
        deserializer.deserialize_seq(CoeffsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn add_doubles() {
        let p = QPoly::from_i64(&[1, 1]);
        assert_eq!(&p + &p, QPoly::from_i64(&[2, 2]));
    }

    #[test]
    fn mul_binomial_square() {
        let p = QPoly::from_i64(&[1, 1]);
        assert_eq!(&p * &p, QPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn sub_self_cancels() {
        let p = QPoly::from_i64(&[1, 3, 1]);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn exact_div_perfect_square() {
        let sq = QPoly::from_i64(&[1, 2, 1]);
        let d = QPoly::from_i64(&[1, 1]);
        assert_eq!(sq.exact_div(&d).unwrap(), d);
    }

    #[test]
    fn exact_div_by_one_is_identity() {
        let p = QPoly::from_i64(&[3, 0, 7]);
        assert_eq!(p.exact_div(&QPoly::one()).unwrap(), p);
    }

    #[test]
    fn exact_div_q_cubed_minus_q_by_q() {
        // multiply back to confirm
        let p = QPoly::from_i64(&[0, -1, 0, 1]);
        let d = QPoly::from_i64(&[0, 1]);
        let r = p.exact_div(&d).unwrap();
        assert_eq!(r, QPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(&r * &d, p);
    }

    #[test]
    fn exact_div_rejects_inexact() {
        let p = QPoly::from_i64(&[1, 1, 1]);
        let d = QPoly::from_i64(&[1, 1]);
        assert_eq!(p.exact_div(&d), Err(Error::NonExactDivision));
        assert_eq!(p.exact_div(&QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn nonneg_scan() {
        assert!(QPoly::from_i64(&[1, 3, 1]).is_nonneg());
        assert!(!QPoly::from_i64(&[-1, 0, 1]).is_nonneg());
        assert!(QPoly::zero().is_nonneg());
        assert_eq!(QPoly::from_i64(&[0, 2, -3]).first_negative_coeff(), Some(2));
    }

    #[test]
    fn coefficientwise_order() {
        let f = QPoly::from_i64(&[1, 2]);
        let g = QPoly::from_i64(&[1, 1]);
        assert!(f.geq_q(&g));
        assert!(!QPoly::from_i64(&[1, 1]).geq_q(&QPoly::from_i64(&[2])));
        assert!(f.geq_q(&f));
    }

    #[test]
    fn eval_points() {
        let p = QPoly::from_i64(&[1, 2, 1]);
        assert_eq!(p.eval(&rat_int(1)), rat_int(4));
        assert_eq!(p.eval(&rat_int(0)), rat_int(1));
        // q-Schroder r_2 at q=1 is the Schroder number 6
        assert_eq!(QPoly::from_i64(&[1, 3, 2]).eval(&rat_int(1)), rat_int(6));
        assert_eq!(
            QPoly::from_i64(&[0, 0, 4]).eval(&rat(1, 2)),
            rat_int(1)
        );
    }

    #[test]
    fn display_readable() {
        assert_eq!(QPoly::from_i64(&[1, 3, 1]).to_string(), "1 + 3q + q^2");
        assert_eq!(QPoly::from_i64(&[0, -1, 2]).to_string(), "-q + 2q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_roundtrip_mixed_coeffs() {
        let p = QPoly::from_coeffs(vec![rat_int(1), rat(1, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[1,"1/2"]"#);
        let back: QPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(
            serde_json::to_string(&QPoly::from_i64(&[1, 3, 1])).unwrap(),
            "[1,3,1]"
        );
    }

    #[test]
    fn json_term_forms() {
        let v: serde_json::Value = serde_json::json!(5);
        assert_eq!(qpoly_from_json(&v).unwrap(), QPoly::from_int(5));
        let v: serde_json::Value = serde_json::json!([1, "3/2", 1]);
        assert_eq!(
            qpoly_from_json(&v).unwrap(),
            QPoly::from_coeffs(vec![rat_int(1), rat(3, 2), rat_int(1)])
        );
        assert!(qpoly_from_json(&serde_json::json!(1.5)).is_err());
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((-6i64..=6, 1i64..=3), 0..5)
            .prop_map(|cs| QPoly::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn degree_adds_under_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(
                (&a * &b).degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn eval_is_ring_hom(a in small_poly(), b in small_poly(), n in -4i64..=4, d in 1i64..=3) {
            let x = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn mul_then_exact_div_roundtrips(p in small_poly(), d in small_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&p * &d).exact_div(&d).unwrap(), p);
        }

        #[test]
        fn coefficient_order_is_partial_order(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert!(a.geq_q(&a));
            if a.geq_q(&b) && b.geq_q(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.geq_q(&b) && b.geq_q(&c) {
                prop_assert!(a.geq_q(&c));
            }
        }
    }
}
