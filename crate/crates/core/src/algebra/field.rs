//! Exact coefficient fields.
//!
//! Three fields are supported: the rationals, prime fields `F_p` with
//! `p < 2^31`, and the Gaussian rationals `Q(i)` with `i^2 = -1`. The last one
//! only exists so that idempotents which need a square root of `-1` can be
//! exhibited over an extension of `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
    GaussianRational,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => FieldElement::Prime {
                v: v.rem_euclid(*p as i64) as u64,
                p: *p,
            },
            Field::GaussianRational => FieldElement::Gaussian(
                BigRational::from_integer(v.into()),
                BigRational::zero(),
            ),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                FieldElement::Prime { v: r, p: *p }
            }
            Field::GaussianRational => {
                FieldElement::Gaussian(BigRational::from_integer(v.clone()), BigRational::zero())
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.from_bigint(num).mul(&d.inv()?))
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        self.from_fraction(q.numer(), q.denom())
    }

    /// Imaginary unit of `Q(i)`.
    pub fn imaginary_unit(&self) -> Option<FieldElement> {
        match self {
            Field::GaussianRational => Some(FieldElement::Gaussian(
                BigRational::zero(),
                BigRational::one(),
            )),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            _ => 0,
        }
    }

    /// Every element, when the field is finite.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        match self {
            Field::Prime(p) => Some((0..*p).map(|v| FieldElement::Prime { v, p: *p }).collect()),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rational => "Q".into(),
            Field::Prime(p) => format!("F{p}"),
            Field::GaussianRational => "Q(i)".into(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { v: u64, p: u64 },
    Gaussian(BigRational, BigRational),
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch between {a} and {b}")
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { p, .. } => Field::Prime(*p),
            FieldElement::Gaussian(..) => Field::GaussianRational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { v, .. } => *v == 0,
            FieldElement::Gaussian(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { v, .. } => *v == 1,
            FieldElement::Gaussian(a, b) => a.is_one() && b.is_zero(),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Prime { v, p } => FieldElement::Prime {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
            FieldElement::Gaussian(a, b) => {
                let n = a * a + b * b;
                FieldElement::Gaussian(a / &n, -(b / &n))
            }
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The rational value, when the element lives in `Q` (or is a real Gaussian).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Gaussian(a, b) if b.is_zero() => Some(a.clone()),
            _ => None,
        }
    }

    /// Representative in `0..p` for prime-field elements.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            FieldElement::Prime { v, .. } => Some(*v),
            _ => None,
        }
    }

    /// Embeds a rational into `Q(i)`; identity on everything else.
    pub fn to_gaussian(&self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Gaussian(q.clone(), BigRational::zero()),
            other => other.clone(),
        }
    }

    /// Whether the printed form needs parentheses when used as a coefficient.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            FieldElement::Gaussian(a, b) => !a.is_zero() && !b.is_zero(),
            _ => false,
        }
    }

    pub(crate) fn is_negative_display(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Gaussian(a, b) => {
                (b.is_zero() && a.is_negative()) || (a.is_zero() && b.is_negative())
            }
            _ => false,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Prime { v: a, p }, FieldElement::Prime { v: b, p: q }) if p == q => {
                FieldElement::Prime {
                    v: (a + b) % p,
                    p: *p,
                }
            }
            (FieldElement::Gaussian(a, b), FieldElement::Gaussian(c, d)) => {
                FieldElement::Gaussian(a + c, b + d)
            }
            _ => mismatch(self, o),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Prime { v: a, p }, FieldElement::Prime { v: b, p: q }) if p == q => {
                FieldElement::Prime {
                    v: (a + p - b) % p,
                    p: *p,
                }
            }
            (FieldElement::Gaussian(a, b), FieldElement::Gaussian(c, d)) => {
                FieldElement::Gaussian(a - c, b - d)
            }
            _ => mismatch(self, o),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        match (self, o) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Prime { v: a, p }, FieldElement::Prime { v: b, p: q }) if p == q => {
                FieldElement::Prime {
                    v: a * b % p,
                    p: *p,
                }
            }
            (FieldElement::Gaussian(a, b), FieldElement::Gaussian(c, d)) => {
                FieldElement::Gaussian(a * c - b * d, a * d + b * c)
            }
            _ => mismatch(self, o),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { v, p } => FieldElement::Prime {
                v: (p - v) % p,
                p: *p,
            },
            FieldElement::Gaussian(a, b) => FieldElement::Gaussian(-a, -b),
        }
    }
}

impl FieldElement {
    pub fn add(&self, o: &FieldElement) -> FieldElement {
        self + o
    }
    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        self - o
    }
    pub fn mul(&self, o: &FieldElement) -> FieldElement {
        self * o
    }
    pub fn neg(&self) -> FieldElement {
        -self
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => f.write_str(&fmt_rational(q)),
            FieldElement::Prime { v, .. } => write!(f, "{v}"),
            FieldElement::Gaussian(a, b) => {
                if b.is_zero() {
                    f.write_str(&fmt_rational(a))
                } else if a.is_zero() {
                    write!(f, "{}*i", fmt_rational(b))
                } else if b.is_negative() {
                    write!(f, "{}-{}*i", fmt_rational(a), fmt_rational(&-b))
                } else {
                    write!(f, "{}+{}*i", fmt_rational(a), fmt_rational(b))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        let a = f5.from_i64(2);
        let b = f5.from_i64(3);
        assert!((&a * &b).is_one());
        assert_eq!((&a - &b).as_residue(), Some(4));
        assert_eq!(a.inv().unwrap().as_residue(), Some(3));
        assert_eq!(f5.from_i64(-1).as_residue(), Some(4));
    }

    #[test]
    fn rejects_non_primes_and_zero_division() {
        assert_eq!(Field::prime(15), Err(Error::NotPrime(15)));
        assert!(Field::prime(1 << 31).is_err());
        assert_eq!(Field::Rational.zero().inv(), Err(Error::DivisionByZero));
        assert!(Field::Rational
            .from_fraction(&1.into(), &0.into())
            .is_err());
        let f3 = Field::prime(3).unwrap();
        assert!(f3.from_fraction(&1.into(), &6.into()).is_err());
    }

    #[test]
    fn gaussian_unit_squares_to_minus_one() {
        let g = Field::GaussianRational;
        let i = g.imaginary_unit().unwrap();
        assert_eq!(&i * &i, g.from_i64(-1));
        let z = &g.from_i64(3) + &i;
        assert!((&z * &z.inv().unwrap()).is_one());
        assert_eq!(z.to_string(), "3+1*i");
    }

    #[test]
    fn rational_display() {
        let q = Field::Rational
            .from_fraction(&BigInt::from(-3), &BigInt::from(6))
            .unwrap();
        assert_eq!(q.to_string(), "-1/2");
    }
}
