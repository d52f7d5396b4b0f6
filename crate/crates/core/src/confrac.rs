//! Continued fractions of square roots and the simplest rational in an
//! open interval.
//!
//! Two independent routes find the first rational (least denominator, then
//! least numerator) in `(√x, √y)`:
//!
//! * the continued-fraction rule for irrational endpoints: expand both roots
//!   until they first disagree at index `k` and emit
//!   `[a0; a1, …, a(k-1), min(ak, bk) + 1]`;
//! * a Stern–Brocot descent with exact comparisons at every branch, which also
//!   handles rational (perfect-square) endpoints and open-interval strictness.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactmath::{surd_cmp, Natural, Surd};
use crate::Error;

/// A reduced non-negative fraction.
/// Serialized as the string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Fraction {
    num: Natural,
    den: Natural,
}

impl Fraction {
    /// # Panics
    ///
    /// Panics if `den` is zero.
    pub fn new(num: Natural, den: Natural) -> Fraction {
        assert!(!den.is_zero(), "fraction denominator must be positive");
        let g = num.gcd(&den);
        if g == Natural::ONE || g.is_zero() {
            Fraction { num, den }
        } else {
            Fraction {
                num: &num / &g,
                den: &den / &g,
            }
        }
    }

    pub fn num(&self) -> &Natural {
        &self.num
    }

    pub fn den(&self) -> &Natural {
        &self.den
    }

    pub fn to_surd(&self) -> Surd {
        Surd::rational(self.num.to_bigint(), self.den.clone())
    }

    /// Decimal value for reporting; never used in decisions.
    pub fn approx_f64(&self) -> f64 {
        let n: f64 = self.num.to_string().parse().unwrap_or(f64::NAN);
        let d: f64 = self.den.to_string().parse().unwrap_or(f64::NAN);
        n / d
    }
}

impl From<Fraction> for String {
    fn from(f: Fraction) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Fraction {
    type Error = String;

    fn try_from(s: String) -> Result<Fraction, String> {
        s.parse()
    }
}

impl std::str::FromStr for Fraction {
    type Err = String;

    fn from_str(s: &str) -> Result<Fraction, String> {
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let num: Natural = n
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let den: Natural = d
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Fraction::new(num, den))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CfKind {
    /// `body` repeats forever after `a0`.
    Periodic,
    /// `body` is the complete list of quotients after `a0`.
    Finite,
}

/// `[a0; body…]`, either terminating or with `body` as the repeating period.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfExpansion {
    pub a0: Natural,
    pub body: Vec<Natural>,
    pub kind: CfKind,
}

impl CfExpansion {
    pub fn finite(a0: Natural, body: Vec<Natural>) -> CfExpansion {
        CfExpansion {
            a0,
            body,
            kind: CfKind::Finite,
        }
    }

    /// Partial quotient at index `i` (`0` is `a0`).
    pub fn term(&self, i: usize) -> Option<Natural> {
        if i == 0 {
            return Some(self.a0.clone());
        }
        match self.kind {
            CfKind::Finite => self.body.get(i - 1).cloned(),
            CfKind::Periodic if self.body.is_empty() => None,
            CfKind::Periodic => Some(self.body[(i - 1) % self.body.len()].clone()),
        }
    }

    /// Number of available terms, `None` when unbounded.
    pub fn len(&self) -> Option<usize> {
        match self.kind {
            CfKind::Periodic if !self.body.is_empty() => None,
            _ => Some(self.body.len() + 1),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn terms(&self) -> impl Iterator<Item = Natural> + '_ {
        (0..).map_while(move |i| self.term(i))
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.a0)?;
        if !self.body.is_empty() {
            let joined: Vec<String> = self.body.iter().map(|x| x.to_string()).collect();
            match self.kind {
                CfKind::Finite => write!(f, "; {}", joined.join(", "))?,
                CfKind::Periodic => write!(f, "; ({})", joined.join(", "))?,
            }
        }
        write!(f, "]")
    }
}

/// Lazy partial quotients of `√d`.
///
/// Runs the classical recurrence `m' = den·a − m`, `den' = (d − m'²)/den`,
/// `a' = ⌊(a0 + m')/den'⌋` from `(m, den) = (0, 1)`. Ends after `a0` when `d` is
/// a perfect square.
#[derive(Clone, Debug)]
pub struct SqrtQuotients {
    d: Natural,
    a0: Natural,
    m: Natural,
    den: Natural,
    a: Natural,
    started: bool,
    done: bool,
}

impl SqrtQuotients {
    pub fn new(d: &Natural) -> SqrtQuotients {
        let a0 = d.isqrt();
        SqrtQuotients {
            d: d.clone(),
            a0: a0.clone(),
            m: Natural::ZERO,
            den: Natural::ONE,
            a: a0,
            started: false,
            done: false,
        }
    }

    /// Current `(m, den)` state, i.e. the state that produced the last yielded term.
    fn state(&self) -> (Natural, Natural) {
        (self.m.clone(), self.den.clone())
    }
}

impl Iterator for SqrtQuotients {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.a0.square() == self.d {
                self.done = true;
            }
            return Some(self.a0.clone());
        }
        let m = &(&self.den * &self.a) - &self.m;
        let den = &(&self.d - &m.square()) / &self.den;
        let a = &(&self.a0 + &m) / &den;
        self.m = m;
        self.den = den;
        self.a = a.clone();
        Some(a)
    }
}

/// Continued fraction of `√d`: finite `[√d]` for perfect squares, otherwise
/// `a0` and the full period.
///
/// The period ends when the `(m, den)` state returns to the state that
/// produced `a1`.
pub fn sqrt_cf(d: &Natural) -> CfExpansion {
    let mut it = SqrtQuotients::new(d);
    let a0 = it.next().expect("a0 always exists");
    let Some(first) = it.next() else {
        return CfExpansion::finite(a0, Vec::new());
    };
    let start = it.state();
    let mut body = vec![first];
    loop {
        let term = it.next().expect("irrational roots do not terminate");
        if it.state() == start {
            break;
        }
        body.push(term);
    }
    CfExpansion {
        a0,
        body,
        kind: CfKind::Periodic,
    }
}

/// Value of a finite list of partial quotients.
pub fn evaluate(quotients: &[Natural]) -> Fraction {
    // seeds p(-1)/q(-1) = 1/0 and p(-2)/q(-2) = 0/1
    let (mut p, mut q) = (Natural::ONE, Natural::ZERO);
    let (mut p_prev, mut q_prev) = (Natural::ZERO, Natural::ONE);
    for a in quotients {
        let np = &(a * &p) + &p_prev;
        let nq = &(a * &q) + &q_prev;
        p_prev = std::mem::replace(&mut p, np);
        q_prev = std::mem::replace(&mut q, nq);
    }
    // consecutive convergents are coprime, so no reduction is needed
    Fraction { num: p, den: q }
}

/// The `j`-th convergent `p_j / q_j`.
pub fn convergent(cf: &CfExpansion, j: usize) -> Result<Fraction, Error> {
    if let Some(len) = cf.len() {
        if j >= len {
            return Err(Error::IndexOutOfRange { index: j, len });
        }
    }
    let quotients: Vec<Natural> = cf.terms().take(j + 1).collect();
    Ok(evaluate(&quotients))
}

/// An interval endpoint of the form `√d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEndpoint {
    radicand: Natural,
}

impl QuadraticEndpoint {
    pub fn sqrt(d: impl Into<Natural>) -> QuadraticEndpoint {
        QuadraticEndpoint { radicand: d.into() }
    }

    pub fn radicand(&self) -> &Natural {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.perfect_sqrt().is_some()
    }

    pub fn to_surd(&self) -> Surd {
        Surd::sqrt(self.radicand.clone())
    }
}

/// First rational in the open interval `(x, y)` under the denominator-first
/// ordering.
///
/// Irrational endpoints use the continued-fraction rule; any rational endpoint
/// routes through [`stern_brocot_between`].
pub fn first_rational_between(
    x: &QuadraticEndpoint,
    y: &QuadraticEndpoint,
) -> Result<Fraction, Error> {
    if x.radicand >= y.radicand {
        return Err(Error::EmptyInterval);
    }
    if x.is_rational() || y.is_rational() {
        stern_brocot_between(&x.to_surd(), &y.to_surd())
    } else {
        cf_rule_between(x, y)
    }
}

/// Continued-fraction rule; both endpoints must be irrational.
pub fn cf_rule_between(x: &QuadraticEndpoint, y: &QuadraticEndpoint) -> Result<Fraction, Error> {
    if x.radicand >= y.radicand {
        return Err(Error::EmptyInterval);
    }
    if x.is_rational() || y.is_rational() {
        return Err(Error::Precondition(
            "continued-fraction rule needs irrational endpoints".into(),
        ));
    }
    let mut prefix = Vec::new();
    // distinct irrationals have distinct expansions, so this terminates
    for (a, b) in SqrtQuotients::new(&x.radicand).zip(SqrtQuotients::new(&y.radicand)) {
        if a != b {
            prefix.push(std::cmp::min(a, b) + 1u64);
            return Ok(evaluate(&prefix));
        }
        prefix.push(a);
    }
    unreachable!("expansions of distinct irrational roots must differ")
}

/// Minimal-denominator (then minimal-numerator) rational strictly inside
/// `(lo, hi)` for finite `0 ≤ lo < hi`, by Stern–Brocot descent.
///
/// Runs of identical moves are taken in one step via exponential then
/// binary search, so the cost is polynomial in the size of the answer.
pub fn stern_brocot_between(lo: &Surd, hi: &Surd) -> Result<Fraction, Error> {
    if surd_cmp(lo, hi) != Ordering::Less {
        return Err(Error::EmptyInterval);
    }
    if surd_cmp(lo, &Surd::integer(0)) == Ordering::Less {
        return Err(Error::Precondition(
            "lower endpoint must be non-negative".into(),
        ));
    }
    if hi.is_infinite() {
        return Err(Error::Precondition("upper endpoint must be finite".into()));
    }
    let cmp = |num: &Natural, den: &Natural, e: &Surd| {
        surd_cmp(&Surd::rational(num.to_bigint(), den.clone()), e)
    };

    // left = lp/lq, right = rp/rq (1/0 is +∞)
    let (mut lp, mut lq) = (Natural::ZERO, Natural::ONE);
    let (mut rp, mut rq) = (Natural::ONE, Natural::ZERO);
    loop {
        let mp = &lp + &rp;
        let mq = &lq + &rq;
        if cmp(&mp, &mq, lo) != Ordering::Greater {
            // mediant ≤ lo: slide left bound toward right, (lp + j·rp)/(lq + j·rq) ≤ lo
            let j = largest_true(|j| {
                cmp(&(&lp + &(&rp * j)), &(&lq + &(&rq * j)), lo) != Ordering::Greater
            });
            lp = &lp + &(&rp * &j);
            lq = &lq + &(&rq * &j);
        } else if cmp(&mp, &mq, hi) != Ordering::Less {
            // mediant ≥ hi: slide right bound toward left, (j·lp + rp)/(j·lq + rq) ≥ hi
            let j = largest_true(|j| {
                cmp(&(&(&lp * j) + &rp), &(&(&lq * j) + &rq), hi) != Ordering::Less
            });
            rp = &(&lp * &j) + &rp;
            rq = &(&lq * &j) + &rq;
        } else {
            return Ok(Fraction::new(mp, mq));
        }
    }
}

/// Largest `j ≥ 1` with `pred(j)`, given `pred(1)` holds and `pred` is
/// monotone (true then false) and eventually false.
fn largest_true(pred: impl Fn(&Natural) -> bool) -> Natural {
    let mut good = Natural::ONE;
    let mut step = Natural::from(2u64);
    // exponential search for a failing bound
    let bad = loop {
        if pred(&step) {
            good = step.clone();
            step = &step * 2u64;
        } else {
            break step;
        }
    };
    let mut lo = good;
    let mut hi = bad;
    while &hi - &lo > Natural::ONE {
        let mid = &(&lo + &hi) / 2u64;
        if pred(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn nats(v: &[u64]) -> Vec<Natural> {
        v.iter().map(|&x| n(x)).collect()
    }

    #[test]
    fn fraction_text_round_trip() {
        let f = Fraction::new(n(1700), n(54));
        assert_eq!(f.to_string(), "850/27");
        assert_eq!("850/27".parse::<Fraction>().unwrap(), f);
        assert_eq!("7".parse::<Fraction>().unwrap(), Fraction::new(n(7), n(1)));
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x/2".parse::<Fraction>().is_err());
    }

    #[test]
    fn sqrt2_period() {
        let cf = sqrt_cf(&n(2));
        assert_eq!(cf.a0, n(1));
        assert_eq!(cf.body, nats(&[2]));
        assert_eq!(cf.kind, CfKind::Periodic);
        assert_eq!(cf.to_string(), "[1; (2)]");
    }

    #[test]
    fn sqrt991_and_992_prefixes() {
        let t: Vec<Natural> = SqrtQuotients::new(&n(991)).take(5).collect();
        assert_eq!(t, nats(&[31, 2, 12, 10, 2]));
        let t: Vec<Natural> = sqrt_cf(&n(992)).terms().take(5).collect();
        assert_eq!(t, nats(&[31, 2, 62, 2, 62]));
    }

    #[test]
    fn perfect_square_is_finite() {
        let cf = sqrt_cf(&n(49));
        assert_eq!(cf, CfExpansion::finite(n(7), vec![]));
        assert_eq!(cf.len(), Some(1));
        assert_eq!(sqrt_cf(&Natural::ZERO).a0, Natural::ZERO);
    }

    #[test]
    fn convergents() {
        let z = CfExpansion::finite(n(31), nats(&[2, 13]));
        assert_eq!(convergent(&z, 2).unwrap().to_string(), "850/27");
        assert_eq!(
            convergent(&CfExpansion::finite(n(1), vec![]), 0)
                .unwrap()
                .to_string(),
            "1/1"
        );
        assert_eq!(convergent(&sqrt_cf(&n(2)), 3).unwrap().to_string(), "17/12");
        assert_eq!(
            convergent(&z, 3),
            Err(Error::IndexOutOfRange { index: 3, len: 3 })
        );
    }

    #[test]
    fn first_rational_examples() {
        let e = QuadraticEndpoint::sqrt;
        assert_eq!(
            first_rational_between(&e(991u64), &e(992u64))
                .unwrap()
                .to_string(),
            "850/27"
        );
        assert_eq!(
            first_rational_between(&e(8u64), &e(9u64))
                .unwrap()
                .to_string(),
            "17/6"
        );
        assert_eq!(
            first_rational_between(&e(2u64), &e(3u64))
                .unwrap()
                .to_string(),
            "3/2"
        );
        assert_eq!(
            first_rational_between(&e(3u64), &e(3u64)),
            Err(Error::EmptyInterval)
        );
        assert_eq!(
            first_rational_between(&e(5u64), &e(3u64)),
            Err(Error::EmptyInterval)
        );
        // wide interval: smallest integer wins
        assert_eq!(
            first_rational_between(&e(2u64), &e(30u64))
                .unwrap()
                .to_string(),
            "2/1"
        );
    }

    #[test]
    fn cf_rule_rejects_rational_endpoints() {
        let e = QuadraticEndpoint::sqrt;
        assert!(matches!(
            cf_rule_between(&e(8u64), &e(9u64)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn stern_brocot_open_interval_is_strict() {
        // (1, 2) excludes both integers
        let f = stern_brocot_between(&Surd::integer(1), &Surd::integer(2)).unwrap();
        assert_eq!(f.to_string(), "3/2");
        // (1/3, 1/2) → 2/5
        let f = stern_brocot_between(&Surd::rational(1, n(3)), &Surd::rational(1, n(2))).unwrap();
        assert_eq!(f.to_string(), "2/5");
        // (0, 1/1000) → 1/1001
        let f = stern_brocot_between(&Surd::integer(0), &Surd::rational(1, n(1000))).unwrap();
        assert_eq!(f.to_string(), "1/1001");
    }
}
