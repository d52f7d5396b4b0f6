//! Exact quadratic surds `(p + q·√d) / r` extended with `+∞`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Natural;
use crate::Error;

/// Square factors below this bound are pulled out of the radicand on
/// construction. Larger square factors may remain; ordering and equality do
/// not depend on the representation.
const SQUARE_FACTOR_LIMIT: u64 = 1000;

#[derive(Clone, Debug)]
pub enum Surd {
    Finite(QuadraticSurd),
    Infinity,
}

/// A finite surd `(p + q·√d) / r` with `q ≥ 0` and `r > 0`.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    p: BigInt,
    q: Natural,
    d: Natural,
    r: Natural,
}

impl QuadraticSurd {
    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &Natural {
        &self.q
    }
    pub fn d(&self) -> &Natural {
        &self.d
    }
    pub fn r(&self) -> &Natural {
        &self.r
    }

    fn normalized(mut p: BigInt, mut q: Natural, mut d: Natural, mut r: Natural) -> Self {
        if q.is_zero() || d.is_zero() {
            q = Natural::ZERO;
            d = Natural::ZERO;
        } else if let Some(root) = d.perfect_sqrt() {
            p += (&q * &root).to_bigint();
            q = Natural::ZERO;
            d = Natural::ZERO;
        } else {
            let (f, rest) = extract_square_factor(&d);
            q = &q * &f;
            d = rest;
        }
        let mut g = q.gcd(&r);
        if !p.is_zero() {
            g = g.gcd(&Natural::try_from(&p.abs()).expect("abs is non-negative"));
        }
        if g > Natural::ONE {
            let gi = g.to_bigint();
            p /= &gi;
            q = &q / &g;
            r = &r / &g;
        }
        QuadraticSurd { p, q, d, r }
    }

    /// Exact value when the radical part vanishes.
    pub fn as_rational(&self) -> Option<(BigInt, Natural)> {
        self.q.is_zero().then(|| (self.p.clone(), self.r.clone()))
    }
}

/// Splits `d = f²·rest` for square factors with base below [`SQUARE_FACTOR_LIMIT`].
fn extract_square_factor(d: &Natural) -> (Natural, Natural) {
    let mut f = Natural::ONE;
    let mut rest = d.clone();
    let mut p: u64 = 2;
    while p < SQUARE_FACTOR_LIMIT {
        let pp = Natural::from(p * p);
        if pp > rest {
            break;
        }
        loop {
            let (quo, rem) = rest.div_rem(&pp);
            if !rem.is_zero() {
                break;
            }
            rest = quo;
            f = &f * p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (f, rest)
}

impl Surd {
    /// Builds `(p + q·√d) / r` in canonical form.
    ///
    /// # Panics
    ///
    /// Panics if `r` is zero; zero denominators are mapped to [`Surd::Infinity`]
    /// by the callers that need that convention.
    pub fn new(p: impl Into<BigInt>, q: Natural, d: Natural, r: Natural) -> Surd {
        assert!(!r.is_zero(), "surd denominator must be positive");
        Surd::Finite(QuadraticSurd::normalized(p.into(), q, d, r))
    }

    pub fn integer(v: impl Into<BigInt>) -> Surd {
        Surd::new(v, Natural::ZERO, Natural::ZERO, Natural::ONE)
    }

    pub fn rational(num: impl Into<BigInt>, den: Natural) -> Surd {
        Surd::new(num, Natural::ZERO, Natural::ZERO, den)
    }

    /// `√d`.
    pub fn sqrt(d: Natural) -> Surd {
        Surd::new(0, Natural::ONE, d, Natural::ONE)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Surd::Infinity)
    }

    pub fn finite(&self) -> Option<&QuadraticSurd> {
        match self {
            Surd::Finite(x) => Some(x),
            Surd::Infinity => None,
        }
    }

    /// `k · self` for a natural `k`. `0 · ∞` is taken as `0`.
    pub fn scale(&self, k: &Natural) -> Surd {
        match self {
            Surd::Finite(x) => Surd::new(&x.p * k.to_bigint(), &x.q * k, x.d.clone(), x.r.clone()),
            Surd::Infinity if k.is_zero() => Surd::integer(0),
            Surd::Infinity => Surd::Infinity,
        }
    }

    /// `⌊self⌋`, exact.
    ///
    /// Computed as `⌊(p + ⌊q·√d⌋) / r⌋ = ⌊(p + isqrt(q²d)) / r⌋`. This is sound:
    /// with `N = p + ⌊q√d⌋` the numerator `x = p + q√d` lies in `[N, N + 1)`, and for
    /// a positive integer `r` no integer multiple of `r` lies in `(N, N + 1)`, so
    /// `⌊x / r⌋ = ⌊N / r⌋`.
    pub fn floor(&self) -> Result<BigInt, Error> {
        let x = self.finite().ok_or(Error::InfiniteSurd)?;
        let root = (x.q.square() * &x.d).isqrt();
        Ok((&x.p + root.to_bigint()).div_floor(&x.r.to_bigint()))
    }

    /// Decimal approximation for rendering and reports only.
    pub fn approx_f64(&self) -> f64 {
        match self {
            Surd::Infinity => f64::INFINITY,
            Surd::Finite(x) => {
                let p: f64 = x.p.to_string().parse().unwrap_or(f64::NAN);
                let q: f64 = x.q.to_string().parse().unwrap_or(f64::NAN);
                let d: f64 = x.d.to_string().parse().unwrap_or(f64::NAN);
                let r: f64 = x.r.to_string().parse().unwrap_or(f64::NAN);
                (p + q * d.sqrt()) / r
            }
        }
    }
}

/// `⌊x⌋` for a finite surd; rejects `+∞`.
pub fn floor_surd(x: &Surd) -> Result<BigInt, Error> {
    x.floor()
}

/// Exact ordering of two extended surds.
pub fn surd_cmp(x: &Surd, y: &Surd) -> Ordering {
    match (x, y) {
        (Surd::Infinity, Surd::Infinity) => Ordering::Equal,
        (Surd::Infinity, _) => Ordering::Greater,
        (_, Surd::Infinity) => Ordering::Less,
        (Surd::Finite(x), Surd::Finite(y)) => {
            // x - y has the sign of r_y(p_x + q_x√d_x) - r_x(p_y + q_y√d_y)
            let rx = x.r.to_bigint();
            let ry = y.r.to_bigint();
            let u = &ry * &x.p - &rx * &y.p;
            let v = &y.r * &x.q;
            let w = &x.r * &y.q;
            sign_of_int_plus_radicals(&u, &v, &x.d, &w, &y.d)
        }
    }
}

/// Sign of `u + v·√d1 − w·√d2` with `v, w ≥ 0`, by isolation and squaring.
fn sign_of_int_plus_radicals(
    u: &BigInt,
    v: &Natural,
    d1: &Natural,
    w: &Natural,
    d2: &Natural,
) -> Ordering {
    // a = v√d1, b = w√d2, both non-negative; compare via a² and b²
    let a2 = v.square() * d1;
    let b2 = w.square() * d2;
    let radical_sign = a2.cmp(&b2);
    let u_sign = u.sign();
    match (u_sign, radical_sign) {
        (Sign::NoSign, s) => s,
        (Sign::Plus, Ordering::Greater | Ordering::Equal) => Ordering::Greater,
        (Sign::Minus, Ordering::Less | Ordering::Equal) => Ordering::Less,
        (Sign::Plus, Ordering::Less) | (Sign::Minus, Ordering::Greater) => {
            // signs disagree: compare |u| with |a - b|, i.e. u² against a² + b² - 2ab.
            // sign(u² - (a-b)²) = sign(e + 2ab) with e = u² - a² - b²
            let e = u * u - a2.to_bigint() - b2.to_bigint();
            let two_ab_sq = (a2 * b2) * 4u64; // (2ab)²
            let mag = match e.sign() {
                Sign::Plus | Sign::NoSign => {
                    if e.is_zero() && two_ab_sq.is_zero() {
                        Ordering::Equal
                    } else {
                        Ordering::Greater
                    }
                }
                Sign::Minus => two_ab_sq.to_bigint().cmp(&(&e * &e)),
            };
            // |u| > |a - b| means u's sign wins
            match (mag, u_sign) {
                (Ordering::Equal, _) => Ordering::Equal,
                (Ordering::Greater, Sign::Plus) | (Ordering::Less, Sign::Minus) => {
                    Ordering::Greater
                }
                _ => Ordering::Less,
            }
        }
    }
}

/// Exact sign of `s − k(√a + √(a+1))`.
///
/// `s > k(√a + √(a+1))` iff `s² > k²(2a+1) + 2k²√(a²+a)`; when the integer residual
/// `s² − k²(2a+1)` is positive the radical is isolated and squared once more.
pub fn cmp_int_vs_sum_sqrt(s: &Natural, k: &Natural, a: &Natural) -> Ordering {
    let k2 = k.square();
    let lhs = s.square().to_bigint();
    let rational = (&k2 * (a * 2u64 + 1u64)).to_bigint();
    let residual = lhs - rational;
    // radical part 2k²√(a² + a)
    let rad_sq = (k2.square() * 4u64) * (a.square() + a);
    match residual.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => {
            if rad_sq.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
        Sign::Plus => (&residual * &residual).cmp(&rad_sq.to_bigint()),
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        surd_cmp(self, other) == Ordering::Equal
    }
}

impl Eq for Surd {}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surd {
    fn cmp(&self, other: &Self) -> Ordering {
        surd_cmp(self, other)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surd::Infinity => write!(f, "inf"),
            Surd::Finite(x) => {
                let one = Natural::ONE;
                let body = if x.q.is_zero() {
                    x.p.to_string()
                } else {
                    let rad = if x.q == one {
                        format!("sqrt({})", x.d)
                    } else {
                        format!("{}*sqrt({})", x.q, x.d)
                    };
                    if x.p.is_zero() {
                        rad
                    } else {
                        format!("({} + {})", x.p, rad)
                    }
                };
                if x.r == one {
                    write!(f, "{body}")
                } else {
                    write!(f, "{body}/{}", x.r)
                }
            }
        }
    }
}

impl From<BigInt> for Surd {
    fn from(v: BigInt) -> Self {
        Surd::integer(v)
    }
}

impl From<&Natural> for Surd {
    fn from(v: &Natural) -> Self {
        Surd::integer(v.to_bigint())
    }
}

impl One for Surd {
    fn one() -> Self {
        Surd::integer(1)
    }
}

impl std::ops::Mul for Surd {
    type Output = Surd;
    /// Only products with a rational factor stay inside the `(p + q√d)/r` form.
    ///
    /// # Panics
    ///
    /// Panics when both factors carry a radical.
    fn mul(self, rhs: Surd) -> Surd {
        match (self, rhs) {
            (Surd::Infinity, _) | (_, Surd::Infinity) => Surd::Infinity,
            (Surd::Finite(x), Surd::Finite(y)) => {
                let (rat, other) = match (x.as_rational(), y.as_rational()) {
                    (Some(r), _) => (r, y),
                    (None, Some(r)) => (r, x),
                    (None, None) => panic!("product of two irrational surds"),
                };
                let (num, den) = rat;
                let sign_neg = num.is_negative();
                let mag = Natural::try_from(&num.abs()).expect("abs");
                assert!(
                    !sign_neg || other.q.is_zero(),
                    "negative scaling of a radical"
                );
                Surd::new(
                    &other.p * &num,
                    &other.q * &mag,
                    other.d.clone(),
                    &other.r * &den,
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn surd(p: i64, q: u64, d: u64, r: u64) -> Surd {
        Surd::new(p, n(q), n(d), n(r))
    }

    #[test]
    fn floor_examples() {
        assert_eq!(surd(2, 1, 9, 5).floor().unwrap(), BigInt::from(1));
        assert_eq!(surd(3, 1, 8, 1).floor().unwrap(), BigInt::from(5));
        assert_eq!(surd(0, 2, 2, 1).floor().unwrap(), BigInt::from(2));
        // negative numerators floor toward -∞
        assert_eq!(surd(-7, 1, 2, 2).floor().unwrap(), BigInt::from(-3));
        assert!(matches!(Surd::Infinity.floor(), Err(Error::InfiniteSurd)));
    }

    #[test]
    fn canonical_form() {
        let x = surd(2, 1, 9, 5);
        let f = x.finite().unwrap();
        assert!(f.q().is_zero());
        assert_eq!(f.p(), &BigInt::from(1));
        assert_eq!(f.r(), &Natural::ONE);

        let y = surd(4, 2, 12, 6); // (4 + 4√3)/6 = (2 + 2√3)/3
        let f = y.finite().unwrap();
        assert_eq!(
            (f.p().clone(), f.q().clone(), f.d().clone(), f.r().clone()),
            (BigInt::from(2), n(2), n(3), n(3))
        );
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(
            surd_cmp(&surd(3, 1, 8, 1), &surd(2, 1, 9, 5)),
            Ordering::Greater
        );
        let x = surd(4, 1, 12, 4);
        assert_eq!(surd_cmp(&x, &x), Ordering::Equal);
        assert_eq!(surd_cmp(&x, &Surd::Infinity), Ordering::Less);
        assert_eq!(surd_cmp(&Surd::Infinity, &Surd::Infinity), Ordering::Equal);
        // equal values with different radicands: √8 = 2√2
        assert_eq!(Surd::sqrt(n(8)), surd(0, 2, 2, 1));
        // √2 + √3 vs √10: 5 + 2√6 ≈ 9.899 < 10
        assert_eq!(
            surd_cmp(&surd(0, 1, 2, 1), &surd(0, 1, 10, 1)),
            Ordering::Less
        );
        // (1 + √2) vs √5: 2.414 > 2.236
        assert_eq!(
            surd_cmp(&surd(1, 1, 2, 1), &surd(0, 1, 5, 1)),
            Ordering::Greater
        );
    }

    #[test]
    fn sum_sqrt_examples() {
        assert_eq!(cmp_int_vs_sum_sqrt(&n(6), &n(1), &n(8)), Ordering::Greater);
        assert_eq!(cmp_int_vs_sum_sqrt(&n(5), &n(1), &n(8)), Ordering::Less);
        assert_eq!(cmp_int_vs_sum_sqrt(&n(3), &n(1), &n(2)), Ordering::Less);
        assert_eq!(cmp_int_vs_sum_sqrt(&n(4), &n(1), &n(2)), Ordering::Greater);
        // 2·(√2 + √3) ≈ 6.29
        assert_eq!(cmp_int_vs_sum_sqrt(&n(6), &n(2), &n(2)), Ordering::Less);
        assert_eq!(cmp_int_vs_sum_sqrt(&n(7), &n(2), &n(2)), Ordering::Greater);
    }

    #[test]
    fn rational_scaling() {
        let x = surd(2, 1, 8, 4); // (2 + 2√2)/4 = (1 + √2)/2
        let y = x.scale(&n(4));
        assert_eq!(y, surd(2, 2, 2, 1));
        assert_eq!(Surd::rational(3, n(2)) * Surd::sqrt(n(2)), surd(0, 3, 2, 2));
        assert!(Surd::Infinity.scale(&n(3)).is_infinite());
        assert_eq!(Surd::Infinity.scale(&Natural::ZERO), Surd::integer(0));
    }

    #[test]
    fn display() {
        assert_eq!(surd(3, 1, 8, 1).to_string(), "(3 + 2*sqrt(2))");
        assert_eq!(surd(4, 1, 12, 4).to_string(), "(2 + sqrt(3))/2");
        assert_eq!(Surd::Infinity.to_string(), "inf");
    }
}
