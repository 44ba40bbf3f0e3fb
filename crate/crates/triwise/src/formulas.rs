//! Exact arbitrary-precision evaluation of the closed-form counts, bounds
//! and threshold constants, all in integer / rational arithmetic.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// C(n, k) as a big integer; out-of-range k (negative or > n) gives 0,
/// matching the silent vanishing convention of binomial tails.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || k > n || n < 0 {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from((n as u64) - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

fn big(b: BigUint) -> BigInt {
    BigInt::from(b)
}

fn rat_int(b: BigUint) -> BigRational {
    BigRational::from_integer(big(b))
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Closed forms have no bitset behind them, so n is not capped at 128 here.
fn check_params(n: u32, k: u32, r: u32, t: u32) -> Result<()> {
    if n < 1 || k > n || r < 2 || t < 1 || t > k {
        return Err(Error::Param(format!(
            "need 1 <= k <= n, r >= 2, 1 <= t <= k; got n={n}, k={k}, r={r}, t={t}"
        )));
    }
    Ok(())
}

/// Exact number of (r+1,t)-triangles in G_{r,t} by inclusion-exclusion over
/// the common outside element: a triangle picks r+1 distinct decomposition
/// blocks, and the chosen outside parts must have empty common
/// intersection. With m = n-r-t and s = k-r-t+1 the count is
/// C(r+t, r+1) * sum_j (-1)^j C(m, j) C(m-j, s-j)^{r+1}.
pub fn exact_count_g(n: u32, k: u32, r: u32, t: u32) -> Result<BigUint> {
    check_params(n, k, r, t)?;
    if n < r + t {
        return Err(Error::Param(format!("need n >= r + t = {}", r + t)));
    }
    let m = (n - r - t) as i64;
    let s = k as i64 - r as i64 - t as i64 + 1;
    let mut acc = BigInt::zero();
    let mut j = 0i64;
    while j <= m && j <= s {
        let term = big(binomial(m, j)) * big(binomial(m - j, s - j)).pow(r + 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        j += 1;
    }
    let total = big(binomial((r + t) as i64, (r + 1) as i64)) * acc;
    debug_assert!(!total.is_negative());
    Ok(total.to_biguint().unwrap_or_default())
}

/// The explicit lower bound on the G count:
/// (999/1000) C(r+t, r+1) C(n-r-t, k-r-t+1)^{r+1}.
/// Stated for n >= k^4; `below_hypothesis` flags evaluation outside it.
#[derive(Clone, Debug)]
pub struct LowerBound {
    pub value: BigRational,
    pub below_hypothesis: bool,
}

pub fn lower_bound_l21(n: u32, k: u32, r: u32, t: u32) -> Result<LowerBound> {
    check_params(n, k, r, t)?;
    let blocks = binomial((n - r - t) as i64, k as i64 - r as i64 - t as i64 + 1);
    let value = rat(999, 1000)
        * rat_int(binomial((r + t) as i64, (r + 1) as i64))
        * rat_int(blocks).pow((r + 1) as i32);
    let below = BigUint::from(n) < BigUint::from(k).pow(4);
    Ok(LowerBound { value, below_hypothesis: below })
}

/// Size bound for maximal t-intersecting families with covering number
/// >= t+2: k^2 C(t+2, 2) C(n-t-2, k-t-2).
pub fn size_bound_l22(n: u32, k: u32, t: u32) -> Result<BigUint> {
    if t < 1 || t + 2 > k {
        return Err(Error::Param(format!("need 1 <= t <= k - 2, got t={t}, k={k}")));
    }
    if k > n {
        return Err(Error::Param(format!("k={k} exceeds n={n}")));
    }
    Ok(BigUint::from(k) * BigUint::from(k)
        * binomial((t + 2) as i64, 2)
        * binomial(n as i64 - t as i64 - 2, k as i64 - t as i64 - 2))
}

/// Relaxed per-case size bounds for covering number t+1:
/// (6/5, 21/10, k+1) times C(n-t-1, k-t-1).
pub fn size_bounds_l24(n: u32, k: u32, t: u32, case: u32) -> Result<BigRational> {
    if t < 1 || t + 2 > k {
        return Err(Error::Param(format!("need 1 <= t <= k - 2, got t={t}, k={k}")));
    }
    if k > n {
        return Err(Error::Param(format!("k={k} exceeds n={n}")));
    }
    let tail = rat_int(binomial(n as i64 - t as i64 - 1, k as i64 - t as i64 - 1));
    let factor = match case {
        1 => rat(6, 5),
        2 => rat(21, 10),
        3 => rat((k + 1) as i64, 1),
        _ => return Err(Error::Param(format!("case must be 1, 2 or 3, got {case}"))),
    };
    Ok(factor * tail)
}

/// Pairwise intersection floor (r-2)(s-t) + t for r-wise t-intersecting
/// families with covering number s. For r = 2 the formula collapses to t.
pub fn intersection_floor(r: u32, s: u32, t: u32) -> Result<u32> {
    if s < t {
        return Err(Error::Param(format!("need s >= t, got s={s}, t={t}")));
    }
    Ok((r - 2) * (s - t) + t)
}

/// Size bound for ℓ-intersecting families with covering number >= s:
/// ((k-s+2)/(ℓ-s+2))^{s-1} C(k, ℓ) C(n-ℓ-s+t, k-ℓ-s+t).
pub fn size_bound_l42(n: u32, k: u32, t: u32, ell: u32, s: u32) -> Result<BigRational> {
    if ell < t {
        return Err(Error::Param(format!("need ell >= t, got ell={ell}, t={t}")));
    }
    if ell + 2 <= s {
        return Err(Error::Param(format!(
            "need ell - s + 2 >= 1, got ell={ell}, s={s}"
        )));
    }
    let ratio = rat((k as i64) - (s as i64) + 2, (ell as i64) - (s as i64) + 2);
    Ok(ratio.pow(s as i32 - 1)
        * rat_int(binomial(k as i64, ell as i64))
        * rat_int(binomial(
            n as i64 - ell as i64 - s as i64 + t as i64,
            k as i64 - ell as i64 - s as i64 + t as i64,
        )))
}

/// The relaxation of the s = t+1, ℓ = r+t-2 specialization:
/// k^{r+2t-2} C(n-r-t+1, k-r-t+1).
pub fn size_bound_l42_relaxed(n: u32, k: u32, r: u32, t: u32) -> Result<BigUint> {
    check_params(n, k, r, t)?;
    Ok(BigUint::from(k).pow(r + 2 * t - 2)
        * binomial(
            n as i64 - r as i64 - t as i64 + 1,
            k as i64 - r as i64 - t as i64 + 1,
        ))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThresholdLemma {
    L43,
    L44,
    L45,
    L46,
}

impl std::fmt::Display for ThresholdLemma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThresholdLemma::L43 => write!(f, "4.3"),
            ThresholdLemma::L44 => write!(f, "4.4"),
            ThresholdLemma::L45 => write!(f, "4.5"),
            ThresholdLemma::L46 => write!(f, "4.6"),
        }
    }
}

/// The (c, d) pair in the n >= c k^d threshold of one of the structural
/// lemmas. `c` is a rational upper bound (conservative for threshold
/// gates); only the first lemma's c involves a real root, bracketed from
/// above to denominator 1000. `d` is rational only for the first lemma.
#[derive(Clone, Debug)]
pub struct ThresholdSpec {
    pub c: BigRational,
    pub c_is_upper_approx: bool,
    pub d: BigRational,
    pub lemma: ThresholdLemma,
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Smallest p/1000 with (p/1000)^e >= x.
fn rational_root_upper(x: &BigRational, e: u32) -> BigRational {
    debug_assert!(!x.is_negative());
    // bracket the integer part first
    let mut hi = BigInt::one();
    while BigRational::from_integer(hi.clone()).pow(e as i32) < *x {
        hi *= 2;
    }
    let mut lo = BigInt::zero();
    let mut hi = hi * 1000;
    // binary search over multiples of 1/1000
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        let cand = BigRational::new(mid.clone(), BigInt::from(1000));
        if cand.pow(e as i32) >= *x {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    BigRational::new(hi, BigInt::from(1000))
}

pub fn threshold_n0(r: u32, t: u32, lemma: ThresholdLemma) -> Result<ThresholdSpec> {
    if t < 1 {
        return Err(Error::Param("t must be at least 1".into()));
    }
    let two = rat(2, 1);
    match lemma {
        ThresholdLemma::L43 => {
            if r < 3 {
                return Err(Error::Param(
                    "lemma 4.3 threshold requires r >= 3 (the exponent has an r - 2 denominator)"
                        .into(),
                ));
            }
            let x = BigRational::new(
                BigInt::from(1000) * big(factorial(t - 1)),
                BigInt::from(999) * big(factorial(r + t)),
            );
            let e = (r + 1) * (r - 2);
            let root = rational_root_upper(&x, e);
            let approx = root > two;
            let c = root.max(two);
            let d = rat((3 * r + 2 * t) as i64 - 5, (r - 2) as i64).max(rat(1, 1));
            Ok(ThresholdSpec { c, c_is_upper_approx: approx, d, lemma })
        }
        ThresholdLemma::L44 => {
            let base = BigRational::new(
                BigInt::from(1000) * BigInt::from(2u32).pow(r + 1),
                BigInt::from(999) * big(binomial((r + t) as i64, (r + 1) as i64)),
            );
            Ok(ThresholdSpec {
                c: base.max(two),
                c_is_upper_approx: false,
                d: rat((r * (r + 2 * t - 1)) as i64, 1),
                lemma,
            })
        }
        ThresholdLemma::L45 => {
            let base = BigRational::new(
                BigInt::from(1000) * BigInt::from(2u32).pow(r + 1) * BigInt::from(t),
                BigInt::from(999) * big(binomial((r + t) as i64, (r + 1) as i64)),
            );
            Ok(ThresholdSpec {
                c: base.max(two),
                c_is_upper_approx: false,
                d: rat((r * (r + 2 * t - 2) + 1) as i64, 1),
                lemma,
            })
        }
        ThresholdLemma::L46 => {
            let base = BigRational::new(
                BigInt::from(1000) * BigInt::from(2u32).pow(r + 1),
                BigInt::from(999) * big(binomial((r + t) as i64, (r + 1) as i64)),
            );
            Ok(ThresholdSpec {
                c: base.max(two),
                c_is_upper_approx: false,
                d: rat((r * (r + 2 * t - 1) + 2) as i64, 1),
                lemma,
            })
        }
    }
}

impl ThresholdSpec {
    /// Whether n >= c k^d holds, evaluated exactly: with d = p/q the gate
    /// is n^q >= c^q k^p. The stored c is an upper bound, so a true result
    /// is conservative.
    pub fn meets(&self, n: u32, k: u32) -> bool {
        let p = self.d.numer().clone();
        let q = self.d.denom().clone();
        let pu: u32 = p.to_string().parse().unwrap_or(u32::MAX);
        let qu: u32 = q.to_string().parse().unwrap_or(1);
        let lhs = rat_int(BigUint::from(n).pow(qu));
        let rhs = self.c.pow(qu as i32) * rat_int(BigUint::from(k).pow(pu));
        lhs >= rhs
    }
}
