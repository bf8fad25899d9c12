//! Exact scalars over ℚ or a prime field 𝔽_p.
//!
//! Rationals are kept on an `i64` fast path and promoted to arbitrary
//! precision only when a result leaves that range. Every value is stored in
//! canonical form, so derived equality and hashing are value equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// 𝔽_p, rejecting non-primes.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2
            || (2..)
                .take_while(|d: &u64| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Small { num: n, den: 1 },
            Field::Prime(p) => Scalar::Mod {
                residue: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::from_big(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Mod {
                    residue: r.to_u64().expect("residue below p"),
                    p,
                }
            }
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::InvalidField(format!("denominator {den} is zero in {self}")))?;
        Ok(&self.from_bigint(num) * &inv)
    }

    /// Parses `"a"` or `"a/b"`.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidField(format!("cannot parse scalar {text:?}"));
        let (n, d) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        self.from_ratio(&n, &d)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An element of ℚ or 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Reduced fraction with positive denominator; `num != i64::MIN`.
    Small {
        num: i64,
        den: i64,
    },
    /// Reduced fraction that does not fit the small representation.
    Big(Box<BigRational>),
    Mod {
        residue: u64,
        p: u64,
    },
}

fn from_i128(mut num: i128, mut den: i128) -> Scalar {
    debug_assert!(den != 0);
    if den < 0 {
        num = -num;
        den = -den;
    }
    let g = num.gcd(&den);
    if g > 1 {
        num /= g;
        den /= g;
    }
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(n), Ok(d)) if n != i64::MIN => Scalar::Small { num: n, den: d },
        _ => Scalar::Big(Box::new(BigRational::new_raw(
            BigInt::from(num),
            BigInt::from(den),
        ))),
    }
}

impl Scalar {
    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Scalar::Small { num: n, den: d },
            _ => Scalar::Big(Box::new(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Scalar::Big(r) => (**r).clone(),
            Scalar::Mod { .. } => panic!("field mismatch: rational operation on a mod-p scalar"),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(*p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(
            self,
            Scalar::Small { num: 0, .. } | Scalar::Mod { residue: 0, .. }
        )
    }

    pub fn is_one(&self) -> bool {
        matches!(
            self,
            Scalar::Small { num: 1, den: 1 } | Scalar::Mod { residue: 1, .. }
        )
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Small { num, den } => from_i128(*den as i128, *num as i128),
            Scalar::Big(r) => Scalar::from_big(r.recip()),
            Scalar::Mod { residue, p } => {
                let (mut a, mut m) = (*residue as i128, *p as i128);
                let (mut x0, mut x1) = (0i128, 1i128);
                // extended Euclid on (residue, p)
                while a > 1 {
                    let q = a / m;
                    (a, m) = (m, a % m);
                    (x0, x1) = (x1 - q * x0, x0);
                }
                Scalar::Mod {
                    residue: x1.rem_euclid(*p as i128) as u64,
                    p: *p,
                }
            }
        })
    }

    /// Integer value when this is an integral rational or a residue.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Small { num, den: 1 } => Some(*num),
            Scalar::Mod { residue, .. } => i64::try_from(*residue).ok(),
            _ => None,
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn check_same(a: u64, b: u64) {
    assert_eq!(a, b, "field mismatch: F{a} vs F{b}");
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Small { num: a, den: b }, Scalar::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    from_i128(a + c, b)
                } else {
                    from_i128(a * d + c * b, b * d)
                }
            }
            (Scalar::Mod { residue: x, p }, Scalar::Mod { residue: y, p: q }) => {
                check_same(*p, *q);
                Scalar::Mod {
                    residue: ((*x as u128 + *y as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Small { num: a, den: b }, Scalar::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Scalar::Small { num: 0, den: 1 };
                }
                from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            (Scalar::Mod { residue: x, p }, Scalar::Mod { residue: y, p: q }) => {
                check_same(*p, *q);
                Scalar::Mod {
                    residue: ((*x as u128 * *y as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small { num, den } => Scalar::Small {
                num: -num,
                den: *den,
            },
            Scalar::Big(r) => Scalar::from_big(-(**r).clone()),
            Scalar::Mod { residue, p } => Scalar::Mod {
                residue: (p - residue) % p,
                p: *p,
            },
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small { num, den: 1 } => write!(f, "{num}"),
            Scalar::Small { num, den } => write!(f, "{num}/{den}"),
            Scalar::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl Scalar {
    /// Sign of a rational value; residues are treated as non-negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small { num, .. } => *num < 0,
            Scalar::Big(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Small { den, .. } => *den == 1,
            Scalar::Big(r) => r.denom().is_one(),
            Scalar::Mod { .. } => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_path_promotes_and_demotes() {
        let q = Field::Rational;
        let big = q.from_i64(i64::MAX);
        let sum = &big + &big;
        assert!(matches!(sum, Scalar::Big(_)));
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Small { .. }));
    }

    #[test]
    fn rational_reduced_form() {
        let q = Field::Rational;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x, Scalar::Small { num: -3, den: 2 });
        assert_eq!(x.to_string(), "-3/2");
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn modp_inverse_and_parse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.from_i64(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(4));
        assert!(f.parse("1/7").is_err());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_primes_panics() {
        let _ = &Field::Prime(2).one() + &Field::Prime(3).one();
    }
}
