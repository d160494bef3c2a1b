use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::upoly;
use super::RingError;

/// An element of `Z[t, t^-1]`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `t^(low + i)`. The first
/// and last stored coefficients are nonzero, and the zero polynomial is the
/// empty vector with `low == 0`, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The monomial `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `coeffs[i]` = coefficient of `t^(low + i)`.
    pub fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        upoly::trim(&mut coeffs);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            low: low + lead as i64,
            coeffs,
        }
    }

    /// Sums `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        let (Some(&lo), Some(&hi)) = (map.keys().next(), map.keys().next_back()) else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self { low: lo, coeffs }
    }

    /// Ordinary polynomial from ascending integer coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_dense(0, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { low: -hi, coeffs }
            }
        }
    }

    /// The substitution `t -> t^k` for `k >= 1`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        Self::from_terms(self.terms().map(|(e, c)| (e * k as i64, c.clone())))
    }

    /// Inverse of `substitute_power(2)`: `Some(q)` with `q(t^2) = self`, or
    /// `None` when an odd exponent occurs.
    pub fn halve_exponents(&self) -> Option<Self> {
        if self.terms().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / 2, c.clone()))))
    }

    /// True for an element of `Z[t]` (no negative exponents).
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Non-negative GCD of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        upoly::content(&self.coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact division by an integer; errors if some coefficient is not divisible.
    pub fn div_scalar(&self, c: &BigInt) -> Result<Self, RingError> {
        if c.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = num_integer::Integer::div_rem(x, c);
            if !r.is_zero() {
                return Err(RingError::InexactDivision);
            }
            coeffs.push(q);
        }
        Ok(Self {
            low: self.low,
            coeffs,
        })
    }

    /// Exact quotient in `Z[t, t^-1]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let q = upoly::exact_div(&self.coeffs, &divisor.coeffs).ok_or(RingError::InexactDivision)?;
        Ok(Self::from_dense(self.low - divisor.low, q))
    }

    /// GCD up to units of `Z[t, t^-1]`: lowest exponent 0, positive leading
    /// coefficient, content equal to the GCD of the contents.
    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_dense(0, upoly::gcd(&self.coeffs, &other.coeffs))
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Degree-bounded view: the terms with exponent `< order`.
    pub fn truncate_below(&self, order: i64) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e < order).map(|(e, c)| (e, c.clone())))
    }

    pub(crate) fn dense(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.high_exp().unwrap().max(b.high_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[(a.low - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut out[(b.low - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(lo, out)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, upoly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Canonical text form `c0*t^e0 + c1*t^e1 + ...`, exponents ascending, the
/// `t^0` factor omitted. Zero renders as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    /// Parses the canonical text form; also accepts bare `t`, `t^e`, `c*t`,
    /// and `-` between terms.
    fn from_str(s: &str) -> Result<Self, RingError> {
        let bad = || RingError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (neg, body_start) = match rest.as_bytes()[0] {
                b'+' => (false, 1),
                b'-' => (true, 1),
                _ => (false, 0),
            };
            let body = &rest[body_start..];
            // next term starts at a sign that does not follow '^' or '*'
            let bytes = body.as_bytes();
            let mut end = body.len();
            for i in 1..bytes.len() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
                    end = i;
                    break;
                }
            }
            let term = &body[..end];
            rest = &body[end..];
            let (coef, exp) = parse_term(term).ok_or_else(bad)?;
            terms.push((exp, if neg { -coef } else { coef }));
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(term: &str) -> Option<(BigInt, i64)> {
    if term.is_empty() {
        return None;
    }
    let (coef_part, var_part) = match term.find('t') {
        None => (term, None),
        Some(i) => (term[..i].trim_end_matches('*'), Some(&term[i + 1..])),
    };
    let coef = match coef_part {
        "" => BigInt::one(),
        "-" => -BigInt::one(),
        c => c.parse().ok()?,
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(v) => v.strip_prefix('^')?.parse().ok()?,
    };
    Some((coef, exp))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a LaurentPoly);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.num_terms()))?;
                for (e, c) in self.0.terms() {
                    let num = serde_json::Number::from_str(&c.to_string()).map_err(serde::ser::Error::custom)?;
                    map.serialize_entry(&e.to_string(), &num)?;
                }
                map.end()
            }
        }
        let mut outer = serializer.serialize_map(Some(1))?;
        outer.serialize_entry("coeffs", &Coeffs(self))?;
        outer.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            coeffs: BTreeMap<String, serde_json::Number>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (k, v) in raw.coeffs {
            let e: i64 = k.parse().map_err(|_| D::Error::custom(format!("bad exponent key {k:?}")))?;
            let c: BigInt = v
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom(format!("non-integer coefficient {v}")))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = LaurentPoly::from_terms([(3, 1), (3, -1), (-2, 0)]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
        let q = LaurentPoly::from_dense(-1, vec![0.into(), 2.into(), 0.into()]);
        assert_eq!(q, LaurentPoly::monomial(2, 0));
    }

    #[test]
    fn bar_monomial() {
        assert_eq!(lp("t^2").bar(), lp("t^-2"));
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
    }

    #[test]
    fn exact_div_factorization() {
        assert_eq!(lp("1 - t^4").exact_div(&lp("1 - t^2")).unwrap(), lp("1 + t^2"));
        assert_eq!(lp("1 + t^2").exact_div(&lp("1 + t")), Err(RingError::InexactDivision));
        assert_eq!(lp("t^-3 - t").exact_div(&lp("t^-1")).unwrap(), lp("t^-2 - t^2"));
    }

    #[test]
    fn text_round_trip() {
        let p = lp("-3*t^-2 + 1 + -1*t^4");
        assert_eq!(p.to_string(), "-3*t^-2 + 1 + -1*t^4");
        assert_eq!(lp(&p.to_string()), p);
        assert_eq!(lp("t + t^2"), LaurentPoly::from_i64s(&[0, 1, 1]));
        assert!("t^".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_schema() {
        let p = lp("2*t^-1 + 5*t^3");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":{"-1":2,"3":5}}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn json_bignum_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::monomial(big, 7);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":{"7":123456789012345678901234567890}}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }

    #[test]
    fn halve_exponents() {
        assert_eq!(lp("t^2 + t^4").halve_exponents(), Some(lp("t + t^2")));
        assert_eq!(lp("t^2 + t^3").halve_exponents(), None);
    }
}
