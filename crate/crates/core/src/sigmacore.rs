//! `τ_s(a)`, `T_s(a)`, `σ(a)` and the bounding family `σ_k(a)`.
//!
//! Everything is computed from integer square roots of products such as
//! `s²a`; `⌊s√a⌋ = isqrt(s²a)` is what keeps the floors of irrationals exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::confrac::{first_rational_between, QuadraticEndpoint};
use crate::exactmath::{Natural, Surd};
use crate::Error;

/// The frame `a = n² + b = m² − c` with `n = ⌊√a⌋`, `m = n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: Natural,
    pub n: Natural,
    pub b: Natural,
    pub m: Natural,
    pub c: Natural,
}

impl Decomposition {
    /// `(n + √(n² + b + i)) / (b + i)`; `i = 1` is `σ_l(a)`, `i = 0` is `σ_l(a − 1)`
    /// read in this frame, which is `+∞` when `b = 0`.
    fn left(&self, i: u64) -> Surd {
        let den = &self.b + i;
        if den.is_zero() {
            return Surd::Infinity;
        }
        let rad = &(&self.n.square() + &self.b) + i;
        Surd::new(self.n.to_bigint(), Natural::ONE, rad, den)
    }

    /// `(m + √(m² − c + j)) / (c − j)`; `j = 0` is `σ_r(a)`, `j = 1` is `σ_r(a + 1)`
    /// read in this frame, which is `+∞` when `c = 1`.
    fn right(&self, j: u64) -> Surd {
        let den = &self.c - &Natural::from(j);
        if den.is_zero() {
            return Surd::Infinity;
        }
        let rad = &self.a + j;
        Surd::new(self.m.to_bigint(), Natural::ONE, rad, den)
    }

    pub fn sigma_l(&self) -> Surd {
        self.left(1)
    }

    pub fn sigma_r(&self) -> Surd {
        self.right(0)
    }

    /// `σ_l(a − 1)` with `b` shifted down in this frame.
    pub fn sigma_l_prev(&self) -> Surd {
        self.left(0)
    }

    /// `σ_r(a + 1)` with `c` shifted down in this frame.
    pub fn sigma_r_next(&self) -> Surd {
        self.right(1)
    }
}

pub fn decompose(a: &Natural) -> Decomposition {
    let n = a.isqrt();
    let m = &n + 1u64;
    let b = a - &n.square();
    let c = &m.square() - a;
    Decomposition {
        a: a.clone(),
        n,
        b,
        m,
        c,
    }
}

/// `τ_s(a) = |{t : s²a < t² < s²(a+1)}|`.
///
/// Counted as `isqrt(s²(a+1)) − isqrt(s²a)`, less one when `a + 1` is a square
/// because the upper end `(s·m)²` is then itself a square and excluded.
pub fn tau(a: &Natural, s: &Natural) -> Natural {
    let s2 = s.square();
    let lo = (&s2 * a).isqrt();
    let hi = (&s2 * &(a + 1u64)).isqrt();
    let count = &hi - &lo;
    if !count.is_zero() && (a + 1u64).perfect_sqrt().is_some() {
        &count - &Natural::ONE
    } else {
        count
    }
}

/// Definitional count of `τ_s(a)`, walking every candidate `t` with explicit
/// strict checks on both ends. Test oracle for [`tau`].
pub fn tau_brute(a: &Natural, s: &Natural) -> Natural {
    Natural::from(t_set(a, s).len())
}

/// `T_s(a)` in increasing order.
pub fn t_set(a: &Natural, s: &Natural) -> Vec<Natural> {
    let s2 = s.square();
    let lo = &s2 * a;
    let hi = &s2 * &(a + 1u64);
    let mut t = &lo.isqrt() + 1u64;
    let mut out = Vec::new();
    loop {
        let t2 = t.square();
        if t2 >= hi {
            break;
        }
        if t2 > lo {
            out.push(t.clone());
        }
        t = t + 1u64;
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Increasing `s` starting at the sound lower bound `σ_1(a)`.
    #[default]
    Scan,
    /// Increasing `s` from 2, ignoring the lower bound. Used to audit the skip.
    ScanFromTwo,
    /// Denominator of the first rational in `(√a, √(a+1))`.
    Cf,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Scan => "scan",
            Strategy::ScanFromTwo => "scan-from-two",
            Strategy::Cf => "cf",
        })
    }
}

/// Least `s ≥ 2` with `τ_s(a) > 0`.
pub fn sigma(a: &Natural, strategy: Strategy) -> Natural {
    match strategy {
        Strategy::Scan => scan_from(a, std::cmp::max(sigma_lower(a), Natural::from(2u64))),
        Strategy::ScanFromTwo => scan_from(a, Natural::from(2u64)),
        Strategy::Cf => {
            let x = QuadraticEndpoint::sqrt(a.clone());
            let y = QuadraticEndpoint::sqrt(a + 1u64);
            first_rational_between(&x, &y)
                .expect("(√a, √(a+1)) is never empty")
                .den()
                .clone()
        }
    }
}

fn scan_from(a: &Natural, start: Natural) -> Natural {
    let mut s = start;
    while tau(a, &s).is_zero() {
        s = s + 1u64;
    }
    s
}

pub fn sigma_l(a: &Natural) -> Surd {
    decompose(a).sigma_l()
}

pub fn sigma_r(a: &Natural) -> Surd {
    decompose(a).sigma_r()
}

fn sigma_k_in(frame: &Decomposition, k: &Natural) -> Natural {
    // ⌊k(n + √(a+1))/(b+1)⌋ = ⌊(kn + ⌊k√(a+1)⌋)/(b+1)⌋, likewise on the right
    let k2 = k.square();
    let left = &(&(k * &frame.n) + &(&k2 * &(&frame.a + 1u64)).isqrt()) / &(&frame.b + 1u64);
    let right = &(&(k * &frame.m) + &(&k2 * &frame.a).isqrt()) / &frame.c;
    std::cmp::max(left, right) + 1u64
}

/// `σ_k(a) = ⌊max(k·σ_l(a), k·σ_r(a))⌋ + 1`.
pub fn sigma_k(a: &Natural, k: &Natural) -> Natural {
    sigma_k_in(&decompose(a), k)
}

/// `σ_1(a)`, the sharp lower bound on `σ(a)`.
pub fn sigma_lower(a: &Natural) -> Natural {
    sigma_k(a, &Natural::ONE)
}

/// `⌈√a + √(a+1)⌉ = isqrt(4a + 2) + 1`.
///
/// Uses `⌊√a + √(a+1)⌋ = ⌊√(4a+2)⌋`; the sum is irrational for `a ≥ 1`, so the
/// ceiling is the floor plus one.
pub fn sigma_upper(a: &Natural) -> Natural {
    (&(a * 4u64) + 2u64).isqrt() + 1u64
}

/// True iff `σ(a) = σ_1(a)`, decided from the bound curves alone:
/// `⌊σ_l(a)⌋ < ⌊σ_l(a−1)⌋` or `⌊σ_r(a)⌋ < ⌊σ_r(a+1)⌋`.
///
/// Both neighbours are read in `a`'s own frame (`b` or `c` shifted down by
/// one) and a zero denominator there is `+∞`. Re-decomposing `a + 1 = m²` in
/// its own frame would give the wrong answer at `a = m² − 1`.
pub fn on_bound_criterion(a: &Natural) -> bool {
    let frame = decompose(a);
    let floor_lt = |x: &Surd, y: &Surd| match (x.floor(), y.floor()) {
        (Ok(fx), Ok(fy)) => fx < fy,
        (Ok(_), Err(_)) => true,
        (Err(_), _) => false,
    };
    floor_lt(&frame.sigma_l(), &frame.sigma_l_prev())
        || floor_lt(&frame.sigma_r(), &frame.sigma_r_next())
}

/// Smallest `k ≥ 1` with `σ_k(a) = σ(a)`.
///
/// `σ_k(a) ≥ k + 1`, so the search stops at `k = σ(a)`; reaching that bound
/// without a match is reported as [`Error::NoKFound`].
pub fn min_k(a: &Natural) -> Result<Natural, Error> {
    min_k_given(a, &sigma(a, Strategy::Scan))
}

/// [`min_k`] with `σ(a)` already known.
pub fn min_k_given(a: &Natural, sigma_a: &Natural) -> Result<Natural, Error> {
    let frame = decompose(a);
    let mut k = Natural::ONE;
    while &k <= sigma_a {
        match sigma_k_in(&frame, &k).cmp(sigma_a) {
            std::cmp::Ordering::Equal => return Ok(k),
            std::cmp::Ordering::Greater => break,
            std::cmp::Ordering::Less => {}
        }
        k = k + 1u64;
    }
    Err(Error::NoKFound(a.clone()))
}

/// Every `k ≤ σ(a)` with `σ_k(a) = σ(a)`.
pub fn all_k_given(a: &Natural, sigma_a: &Natural) -> Vec<Natural> {
    let frame = decompose(a);
    let mut out = Vec::new();
    let mut k = Natural::ONE;
    while &k <= sigma_a {
        if &sigma_k_in(&frame, &k) == sigma_a {
            out.push(k.clone());
        }
        k = k + 1u64;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Crowding {
    /// `⌊s√a⌋ = sn + k` and the next integer is already past `s√(a+1)`.
    Left,
    /// Counted down from `sm`: `sm − k` is past `s√(a+1)`, `sm − k − 1` below `s√a`.
    Right,
}

/// A closed range `[lo, hi]` of denominators `s` with `τ_s(a) = 0`, indexed by
/// the crowding offset `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroWindow {
    pub k: Natural,
    pub lo: Surd,
    pub hi: Surd,
    pub side: Crowding,
}

impl ZeroWindow {
    pub fn contains(&self, s: &Natural) -> bool {
        let s = Surd::from(s);
        self.lo <= s && s <= self.hi
    }
}

/// `k·(p + √d)/den` with the degenerate-limit convention for `den = 0`:
/// `0` when `k = 0`, `+∞` otherwise.
fn scaled_bound(k: &Natural, p: &Natural, d: Natural, den: Natural) -> Surd {
    if den.is_zero() {
        return if k.is_zero() {
            Surd::integer(0)
        } else {
            Surd::Infinity
        };
    }
    Surd::new(p.to_bigint(), Natural::ONE, d, den).scale(k)
}

/// Zero-windows for `0 ≤ k ≤ k_max`, left-crowding first.
///
/// Left: `k(n+√a)/b ≤ s ≤ (k+1)(n+√(a+1))/(b+1)`.
/// Right: `k(m+√(a+1))/(c−1) ≤ s ≤ (k+1)(m+√a)/c`.
/// Windows whose lower end exceeds the upper end are dropped.
pub fn zero_windows(a: &Natural, k_max: &Natural) -> Vec<ZeroWindow> {
    let f = decompose(a);
    let a1 = a + 1u64;
    let mut out = Vec::new();
    for side in [Crowding::Left, Crowding::Right] {
        let mut k = Natural::ZERO;
        while &k <= k_max {
            let k1 = &k + 1u64;
            let (lo, hi) = match side {
                Crowding::Left => (
                    scaled_bound(&k, &f.n, a.clone(), f.b.clone()),
                    scaled_bound(&k1, &f.n, a1.clone(), &f.b + 1u64),
                ),
                Crowding::Right => (
                    scaled_bound(&k, &f.m, a1.clone(), &f.c - &Natural::ONE),
                    scaled_bound(&k1, &f.m, a.clone(), f.c.clone()),
                ),
            };
            if lo <= hi {
                out.push(ZeroWindow {
                    k: k.clone(),
                    lo,
                    hi,
                    side,
                });
            }
            k = k1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn frame(v: u64) -> (u64, u64, u64, u64) {
        let d = decompose(&n(v));
        let g = |x: &Natural| x.to_u64().unwrap();
        (g(&d.n), g(&d.b), g(&d.m), g(&d.c))
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(frame(8), (2, 4, 3, 1));
        assert_eq!(frame(1), (1, 0, 2, 3));
        assert_eq!(frame(12), (3, 3, 4, 4));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&n(8), &n(2)), n(0));
        assert_eq!(tau(&n(8), &n(6)), n(1));
        assert_eq!(tau(&n(3), &n(10)), n(2));
        assert_eq!(tau_brute(&n(8), &n(5)), n(0));
        assert_eq!(tau_brute(&n(12), &n(2)), n(1));
        assert_eq!(tau_brute(&n(991), &n(27)), n(1));
        // s = 1 never admits a square
        for a in 1..50 {
            assert_eq!(tau(&n(a), &n(1)), n(0), "a = {a}");
        }
    }

    #[test]
    fn t_set_examples() {
        assert_eq!(t_set(&n(8), &n(6)), vec![n(17)]);
        assert_eq!(t_set(&n(15), &n(8)), vec![n(31)]);
        assert_eq!(t_set(&n(2), &n(10)), vec![n(15), n(16), n(17)]);
    }

    #[test]
    fn sigma_examples() {
        for strategy in [Strategy::Scan, Strategy::ScanFromTwo, Strategy::Cf] {
            assert_eq!(sigma(&n(8), strategy), n(6), "{strategy}");
            assert_eq!(sigma(&n(991), strategy), n(27), "{strategy}");
            assert_eq!(sigma(&n(19), strategy), n(5), "{strategy}");
            assert_eq!(sigma(&n(1), strategy), n(3), "{strategy}");
        }
    }

    #[test]
    fn bound_curves() {
        assert_eq!(sigma_l(&n(8)), Surd::integer(1));
        assert_eq!(sigma_r(&n(8)), Surd::new(3, n(1), n(8), n(1)));
        assert_eq!(sigma_r(&n(12)), Surd::new(4, n(1), n(12), n(4)));
        assert_eq!(sigma_k(&n(8), &n(1)), n(6));
        assert_eq!(sigma_k(&n(19), &n(1)), n(3));
        assert_eq!(sigma_k(&n(19), &n(2)), n(5));
        assert_eq!(sigma_k(&n(25), &n(1)), n(11));
    }

    #[test]
    fn lower_and_upper() {
        assert_eq!((sigma_lower(&n(8)), sigma_upper(&n(8))), (n(6), n(6)));
        assert_eq!((sigma_lower(&n(25)), sigma_upper(&n(25))), (n(11), n(11)));
        assert_eq!((sigma_lower(&n(19)), sigma_upper(&n(19))), (n(3), n(9)));
    }

    #[test]
    fn criterion_examples() {
        assert!(on_bound_criterion(&n(8)));
        assert!(!on_bound_criterion(&n(19)));
        assert!(on_bound_criterion(&n(12)));
        // the shifted-frame neighbour of 8 is +∞
        assert!(decompose(&n(8)).sigma_r_next().is_infinite());
        assert!(decompose(&n(9)).sigma_l_prev().is_infinite());
    }

    #[test]
    fn min_k_examples() {
        assert_eq!(min_k(&n(8)).unwrap(), n(1));
        assert_eq!(min_k(&n(19)).unwrap(), n(2));
        assert_eq!(min_k(&n(24)).unwrap(), n(1));
        assert_eq!(min_k_given(&n(19), &n(4)), Err(Error::NoKFound(n(19))));
    }

    #[test]
    fn window_examples() {
        let w = zero_windows(&n(8), &n(4));
        let right0 = w
            .iter()
            .find(|w| w.side == Crowding::Right && w.k.is_zero())
            .unwrap();
        assert_eq!(right0.lo, Surd::integer(0));
        assert_eq!(right0.hi, Surd::new(3, n(1), n(8), n(1)));
        assert!((2..=5).all(|s| right0.contains(&n(s))));
        assert!(!right0.contains(&n(6)));
        // right side for c = 1 has only k = 0
        assert_eq!(w.iter().filter(|w| w.side == Crowding::Right).count(), 1);

        let left4 = w
            .iter()
            .find(|w| w.side == Crowding::Left && w.k == n(4))
            .unwrap();
        assert_eq!(left4.lo, Surd::new(2, n(1), n(8), n(1)));
        assert_eq!(left4.hi, Surd::integer(5));
        assert!(left4.contains(&n(5)));

        let w9 = zero_windows(&n(9), &n(3));
        let left: Vec<_> = w9.iter().filter(|w| w.side == Crowding::Left).collect();
        assert_eq!(left.len(), 1);
        assert_eq!(left[0].lo, Surd::integer(0));
        assert_eq!(left[0].hi, Surd::new(3, n(1), n(10), n(1)));
    }
}
