//! Arbitrary-precision natural numbers with a fixed-width fast path.
//!
//! Values that fit in a `u128` are stored inline; every operation uses checked
//! `u128` arithmetic and promotes to [`BigUint`] on overflow, so results are
//! exact at any size. A value is stored as `Big` only when it exceeds
//! `u128::MAX`, which keeps the representation unique and lets `Eq`/`Hash` be
//! derived.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Rem, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Natural(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Small(u128),
    Big(BigUint),
}

impl Natural {
    pub const ZERO: Natural = Natural(Repr::Small(0));
    pub const ONE: Natural = Natural(Repr::Small(1));

    fn from_big(b: BigUint) -> Self {
        match b.to_u128() {
            Some(v) => Natural(Repr::Small(v)),
            None => Natural(Repr::Big(b)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    /// True when the value is held in the fixed-width representation.
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(_))
    }

    pub fn to_u64(&self) -> Option<u64> {
        match &self.0 {
            Repr::Small(v) => u64::try_from(*v).ok(),
            Repr::Big(_) => None,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        match &self.0 {
            Repr::Small(v) => BigUint::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from(self.to_biguint())
    }

    pub fn bits(&self) -> u64 {
        match &self.0 {
            Repr::Small(v) => 128 - u64::from(v.leading_zeros()),
            Repr::Big(b) => b.bits(),
        }
    }

    pub fn is_even(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => v % 2 == 0,
            Repr::Big(b) => b.is_even(),
        }
    }

    pub fn square(&self) -> Natural {
        self * self
    }

    pub fn checked_sub(&self, rhs: &Natural) -> Option<Natural> {
        match (&self.0, &rhs.0) {
            (Repr::Small(x), Repr::Small(y)) => x.checked_sub(*y).map(|v| Natural(Repr::Small(v))),
            (Repr::Small(_), Repr::Big(_)) => None,
            (Repr::Big(x), Repr::Small(y)) => Some(Natural::from_big(x - BigUint::from(*y))),
            (Repr::Big(x), Repr::Big(y)) => {
                if x < y {
                    None
                } else {
                    Some(Natural::from_big(x - y))
                }
            }
        }
    }

    pub fn gcd(&self, rhs: &Natural) -> Natural {
        match (&self.0, &rhs.0) {
            (Repr::Small(x), Repr::Small(y)) => Natural(Repr::Small(x.gcd(y))),
            _ => Natural::from_big(self.to_biguint().gcd(&rhs.to_biguint())),
        }
    }

    /// Floor division with remainder.
    ///
    /// # Panics
    ///
    /// Panics on division by zero.
    pub fn div_rem(&self, rhs: &Natural) -> (Natural, Natural) {
        match (&self.0, &rhs.0) {
            (Repr::Small(x), Repr::Small(y)) => {
                (Natural(Repr::Small(x / y)), Natural(Repr::Small(x % y)))
            }
            _ => {
                let (q, r) = self.to_biguint().div_rem(&rhs.to_biguint());
                (Natural::from_big(q), Natural::from_big(r))
            }
        }
    }

    /// `⌊√self⌋`.
    pub fn isqrt(&self) -> Natural {
        match &self.0 {
            Repr::Small(v) => Natural(Repr::Small(isqrt_u128(*v))),
            Repr::Big(b) => Natural::from_big(isqrt_big(b)),
        }
    }

    /// Returns the root when `self` is a perfect square.
    pub fn perfect_sqrt(&self) -> Option<Natural> {
        let r = self.isqrt();
        if &r.square() == self {
            Some(r)
        } else {
            None
        }
    }
}

/// Integer square root of a `u128`.
///
/// Newton iteration started from a power of two that is at least `√n`. From any
/// start `x ≥ ⌊√n⌋` the next iterate `⌊(x + ⌊n/x⌋)/2⌋` is again `≥ ⌊√n⌋` (AM-GM),
/// and it is strictly smaller than `x` while `x > ⌊√n⌋`. So the sequence is
/// strictly decreasing until it first fails to decrease, which happens exactly
/// at `⌊√n⌋`.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    // 2^ceil(bits/2) > √n
    let mut x: u128 = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Same iteration as [`isqrt_u128`] on arbitrary-precision input.
pub fn isqrt_big(n: &BigUint) -> BigUint {
    if n.bits() <= 1 {
        return n.clone();
    }
    let mut x = BigUint::from(1u8) << n.bits().div_ceil(2);
    loop {
        let y: BigUint = (&x + n / &x) >> 1u8;
        if y >= x {
            return x;
        }
        x = y;
    }
}

impl Ord for Natural {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(x), Repr::Small(y)) => x.cmp(y),
            (Repr::Small(_), Repr::Big(_)) => Ordering::Less,
            (Repr::Big(_), Repr::Small(_)) => Ordering::Greater,
            (Repr::Big(x), Repr::Big(y)) => x.cmp(y),
        }
    }
}

impl PartialOrd for Natural {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Natural> for &Natural {
    type Output = Natural;
    fn add(self, rhs: &Natural) -> Natural {
        if let (Repr::Small(x), Repr::Small(y)) = (&self.0, &rhs.0) {
            if let Some(v) = x.checked_add(*y) {
                return Natural(Repr::Small(v));
            }
        }
        Natural::from_big(self.to_biguint() + rhs.to_biguint())
    }
}

impl Mul<&Natural> for &Natural {
    type Output = Natural;
    fn mul(self, rhs: &Natural) -> Natural {
        if let (Repr::Small(x), Repr::Small(y)) = (&self.0, &rhs.0) {
            if let Some(v) = x.checked_mul(*y) {
                return Natural(Repr::Small(v));
            }
        }
        Natural::from_big(self.to_biguint() * rhs.to_biguint())
    }
}

impl Sub<&Natural> for &Natural {
    type Output = Natural;
    /// # Panics
    ///
    /// Panics if the result would be negative.
    fn sub(self, rhs: &Natural) -> Natural {
        self.checked_sub(rhs)
            .unwrap_or_else(|| panic!("natural subtraction underflow: {self} - {rhs}"))
    }
}

impl Div<&Natural> for &Natural {
    type Output = Natural;
    fn div(self, rhs: &Natural) -> Natural {
        self.div_rem(rhs).0
    }
}

impl Rem<&Natural> for &Natural {
    type Output = Natural;
    fn rem(self, rhs: &Natural) -> Natural {
        self.div_rem(rhs).1
    }
}

macro_rules! forward_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Natural> for Natural {
            type Output = Natural;
            fn $m(self, rhs: Natural) -> Natural { (&self).$m(&rhs) }
        }
        impl $tr<&Natural> for Natural {
            type Output = Natural;
            fn $m(self, rhs: &Natural) -> Natural { (&self).$m(rhs) }
        }
        impl $tr<Natural> for &Natural {
            type Output = Natural;
            fn $m(self, rhs: Natural) -> Natural { self.$m(&rhs) }
        }
        impl $tr<u64> for &Natural {
            type Output = Natural;
            fn $m(self, rhs: u64) -> Natural { self.$m(&Natural::from(rhs)) }
        }
        impl $tr<u64> for Natural {
            type Output = Natural;
            fn $m(self, rhs: u64) -> Natural { (&self).$m(&Natural::from(rhs)) }
        }
    )*};
}
forward_binop!(Add::add, Sub::sub, Mul::mul, Div::div, Rem::rem);

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Natural {
            fn from(v: $t) -> Self { Natural(Repr::Small(v as u128)) }
        }
    )*};
}
from_prim!(u8, u16, u32, u64, u128, usize);

impl From<BigUint> for Natural {
    fn from(b: BigUint) -> Self {
        Natural::from_big(b)
    }
}

impl From<&Natural> for BigUint {
    fn from(n: &Natural) -> Self {
        n.to_biguint()
    }
}

impl From<&Natural> for BigInt {
    fn from(n: &Natural) -> Self {
        n.to_bigint()
    }
}

impl TryFrom<&BigInt> for Natural {
    type Error = ();
    fn try_from(v: &BigInt) -> Result<Self, ()> {
        v.to_biguint().map(Natural::from_big).ok_or(())
    }
}

impl Zero for Natural {
    fn zero() -> Self {
        Natural::ZERO
    }
    fn is_zero(&self) -> bool {
        Natural::is_zero(self)
    }
}

impl std::iter::Sum for Natural {
    fn sum<I: Iterator<Item = Natural>>(iter: I) -> Self {
        iter.fold(Natural::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => fmt::Display::fmt(v, f),
            Repr::Big(b) => fmt::Display::fmt(b, f),
        }
    }
}

impl FromStr for Natural {
    type Err = ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BigUint::from_str(s.trim()).map(Natural::from_big)
    }
}

// Numbers up to u64::MAX are written as JSON numbers, larger ones as decimal strings.
impl Serialize for Natural {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(v) => serializer.serialize_u64(v),
            None => serializer.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Natural {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Num(u64),
            Text(String),
        }
        match Wire::deserialize(deserializer)? {
            Wire::Num(v) => Ok(Natural::from(v)),
            Wire::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt_u128(0), 0);
        assert_eq!(isqrt_u128(1), 1);
        assert_eq!(isqrt_u128(3), 1);
        assert_eq!(isqrt_u128(4), 2);
        assert_eq!(isqrt_u128(288), 16);
        assert_eq!(isqrt_u128(2_890_000), 1700);
        assert_eq!(isqrt_u128(u128::MAX), u64::MAX as u128);
    }

    #[test]
    fn promotion_on_overflow() {
        let big = Natural::from(u128::MAX);
        let sum = &big + &Natural::ONE;
        assert!(!sum.is_small());
        assert_eq!(sum.to_biguint(), BigUint::from(u128::MAX) + 1u8);
        // and back down
        let back = &sum - &Natural::ONE;
        assert!(back.is_small());
        assert_eq!(back, big);
    }

    #[test]
    fn big_isqrt() {
        let r = Natural::from(u128::MAX) + 12345u64;
        let sq = r.square();
        assert_eq!(sq.isqrt(), r);
        assert_eq!((&sq - &Natural::ONE).isqrt(), &r - &Natural::ONE);
        assert_eq!(sq.perfect_sqrt(), Some(r));
    }

    #[test]
    #[should_panic(expected = "underflow")]
    fn sub_underflow_panics() {
        let _ = Natural::from(3u64) - Natural::from(4u64);
    }

    #[test]
    fn parse_and_display_beyond_u128() {
        let n: Natural = "340282366920938463463374607431768211456".parse().unwrap();
        assert!(!n.is_small());
        assert_eq!(n.to_string(), "340282366920938463463374607431768211456");
        assert_eq!(n.to_u64(), None);
    }
}
