//! Exact coefficients in `Q[q]`.
//!
//! Every structure constant of the gluing products is a power of the
//! parameter `q`, so coefficients are kept as univariate polynomials with
//! rational coefficients. A [`QParam`] chooses between the formal parameter
//! and a rational specialization.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"num/den"`, always with an explicit denominator.
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// A polynomial in `q` with rational coefficients.
///
/// Stored as `(exponent, coefficient)` pairs with strictly increasing
/// exponents and no zero coefficients, so derived equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: Vec<(u32, Rational)>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        Self::monomial(0, r)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn q_pow(k: u32) -> Self {
        Self::monomial(k, Rational::one())
    }

    pub fn monomial(exp: u32, r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            Coefficient { terms: vec![(exp, r)] }
        }
    }

    /// Builds a coefficient from arbitrary pairs, normalizing them.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(it: I) -> Self {
        let mut terms: Vec<(u32, Rational)> = it.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u32, Rational)> = Vec::with_capacity(terms.len());
        for (e, r) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += r,
                _ => out.push((e, r)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Coefficient { terms: out }
    }

    pub fn terms(&self) -> &[(u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }

    /// The constant value, if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, r)] => Some(r.clone()),
            _ => None,
        }
    }

    /// Evaluates the polynomial at `q = r`.
    pub fn eval(&self, r: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last = 0u32;
        let mut pow = Rational::one();
        for (e, c) in &self.terms {
            for _ in last..*e {
                pow *= r;
            }
            last = *e;
            acc += c * &pow;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Coefficient {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, r)| json!([e, rational_to_string(r)]))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("coefficient must be an array".into()))?;
        let mut terms = Vec::new();
        for t in arr {
            let pair = t
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("coefficient term must be [exp, \"num/den\"]".into()))?;
            let e = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("exponent must be a nonnegative integer".into()))?;
            let r = match &pair[1] {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) => parse_rational(&n.to_string())?,
                _ => return Err(Error::Parse("coefficient must be a string".into())),
            };
            terms.push((e as u32, r));
        }
        Ok(Self::from_terms(terms))
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Coefficient { terms: out }
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = &*self + rhs;
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            terms: self.terms.iter().map(|(e, r)| (*e, -r)).collect(),
        }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        if rhs.terms.len() == 1 && rhs.terms[0].0 == 0 {
            return self.scale(&rhs.terms[0].1);
        }
        if self.terms.len() == 1 && self.terms[0].0 == 0 {
            return rhs.scale(&self.terms[0].1);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e1, r1) in &self.terms {
            for (e2, r2) in &rhs.terms {
                terms.push((e1 + e2, r1 * r2));
            }
        }
        Coefficient::from_terms(terms)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, r)) in self.terms.iter().rev().enumerate() {
            let neg = r.is_negative();
            let abs = r.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let show_coeff = *e == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

/// The value of the deformation parameter used by a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QParam {
    /// Keep `q` formal: results live in `Q[q]`.
    Formal,
    /// Specialize `q` to a rational.
    Value(Rational),
}

impl QParam {
    pub fn zero() -> Self {
        QParam::Value(Rational::zero())
    }

    pub fn one() -> Self {
        QParam::Value(Rational::one())
    }

    pub fn value(r: Rational) -> Self {
        QParam::Value(r)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, QParam::Value(r) if r.is_zero())
    }

    /// `q^k` as a coefficient.
    pub fn pow(&self, k: u32) -> Coefficient {
        match self {
            QParam::Formal => Coefficient::q_pow(k),
            QParam::Value(r) => {
                let mut acc = Rational::one();
                for _ in 0..k {
                    acc *= r;
                }
                Coefficient::constant(acc)
            }
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("formal") || s == "q" {
            Ok(QParam::Formal)
        } else {
            parse_rational(s).map(QParam::Value)
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::Formal => write!(f, "q"),
            QParam::Value(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[(u32, i64, i64)]) -> Coefficient {
        Coefficient::from_terms(cs.iter().map(|&(e, n, d)| (e, rational(n, d))))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Coefficient::q().eval(&int(0)), int(0));
        assert_eq!(poly(&[(2, 1, 1), (0, 1, 1)]).eval(&int(1)), int(2));
        assert_eq!(poly(&[(1, 3, 1)]).eval(&rational(1, 2)), rational(3, 2));
    }

    #[test]
    fn normalization_is_unique() {
        let a = Coefficient::from_terms(vec![(1, int(1)), (0, int(2)), (1, int(-1))]);
        assert_eq!(a, Coefficient::from_int(2));
        let z = Coefficient::from_terms(vec![(3, int(1)), (3, int(-1))]);
        assert!(z.is_zero());
        assert_eq!(z, Coefficient::zero());
    }

    #[test]
    fn display_and_json() {
        let c = poly(&[(2, 1, 1), (1, -2, 1), (0, 1, 2)]);
        assert_eq!(c.to_string(), "q^2 - 2q + 1/2");
        let v = c.to_json();
        assert_eq!(v.to_string(), r#"[[0,"1/2"],[1,"-2/1"],[2,"1/1"]]"#);
        assert_eq!(Coefficient::from_json(&v).unwrap(), c);
    }

    #[test]
    fn qparam_powers() {
        assert_eq!(QParam::Formal.pow(2), Coefficient::q_pow(2));
        assert_eq!(QParam::value(rational(1, 2)).pow(3), Coefficient::constant(rational(1, 8)));
        assert_eq!(QParam::zero().pow(0), Coefficient::one());
        assert!(QParam::zero().pow(1).is_zero());
    }

    fn arb_coeff() -> impl Strategy<Value = Coefficient> {
        prop::collection::vec((0u32..4, -5i64..6, 1i64..4), 0..4)
            .prop_map(|v| Coefficient::from_terms(v.into_iter().map(|(e, n, d)| (e, rational(n, d)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_ring_morphism(a in arb_coeff(), b in arb_coeff(), n in -3i64..4, d in 1i64..4) {
            let r = rational(n, d);
            prop_assert_eq!((&a * &b).eval(&r), a.eval(&r) * b.eval(&r));
            prop_assert_eq!((&a + &b).eval(&r), a.eval(&r) + b.eval(&r));
        }
    }
}
