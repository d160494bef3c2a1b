use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize};

use super::{LaurentPoly, RingError};

/// An element of `Q(t)` kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: `gcd(num, den)` is a unit, `den` has lowest exponent 0 and
/// a positive constant term, and the integer contents of `num` and `den`
/// are coprime. Zero is `0 / 1`. Derived equality is therefore equality in
/// `Q(t)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.num_terms() == 1 {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        // t is a unit: move the denominator's lowest power into the numerator
        let shift = den.low_exp().unwrap();
        let (mut num, mut den) = (num.shift(-shift), den.shift(-shift));
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c).unwrap();
            den = den.div_scalar(&c).unwrap();
        }
        if den.coeff(0).is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// The substitution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, RingError> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    /// Laurent expansion in ascending powers of `t`, keeping the exponents
    /// strictly below `order`.
    ///
    /// Fails with [`RingError::NonIntegralSeries`] if a coefficient would leave
    /// the integers, which can only happen when the constant term of the
    /// denominator is not a unit.
    pub fn series_expand(&self, order: i64) -> Result<LaurentPoly, RingError> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (_, den) = self.den.dense();
        let d0 = &den[0];
        let start = self.num.low_exp().unwrap();
        if start >= order {
            return Ok(LaurentPoly::zero());
        }
        let len = (order - start) as usize;
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.num.coeff(start + k as i64);
            for (i, d) in den.iter().enumerate().skip(1).take(k) {
                if !d.is_zero() {
                    acc -= d * &out[k - i];
                }
            }
            let (q, r) = acc.div_rem(d0);
            if !r.is_zero() {
                return Err(RingError::NonIntegralSeries);
            }
            out.push(q);
        }
        Ok(LaurentPoly::from_dense(start, out))
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let a = self.den.exact_div(&g).unwrap();
        let b = rhs.den.exact_div(&g).unwrap();
        RatFunc::canonical(&(&self.num * &b) + &(&rhs.num * &a), &(&a * &b) * &g)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        // cross-cancel first to keep the product's gcd small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::canonical(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero, like integer division; see
/// [`RatFunc::checked_div`].
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// `num` alone when the denominator is 1, else `(num)/(den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, RingError> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('(') {
            let (num, rest) = inner.split_once(")/(").ok_or_else(|| RingError::Parse(s.to_string()))?;
            let den = rest.strip_suffix(')').ok_or_else(|| RingError::Parse(s.to_string()))?;
            Self::new(num.parse()?, den.parse()?)
        } else {
            Ok(Self::from(s.parse::<LaurentPoly>()?))
        }
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(deserializer)?;
        RatFunc::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}
