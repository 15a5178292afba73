//! Closed-form genus bounds and the number-theoretic helpers used by the
//! constructions.
//!
//! - [`l_c`]: minimum genus of a cyclically symmetric K_{n,n} embedding
//!   with a Hamiltonian face;
//! - [`l_c_star`]: minimum genus in the 3-dimensional model with an
//!   n-fold rotation axis meeting the surface;
//! - [`l_c_star_tilde`]: the same without the fixed-point assumption.
//!
//! All arithmetic is exact integer arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::zn::{gcd, smallest_prime_divisor, zn_order, CyclicElement};

/// Which case of the piecewise formula for [`l_c`] applies.
///
/// The cases are tested in this order and are mutually exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LcBranch {
    /// `n` even: `n(n-2)/4`.
    Even,
    /// `n ≡ 3 (mod 4)`, `p1 ≠ n`, `p1² ∤ n`:
    /// `⌊n(n-1)/4⌋ + 1 - (p1 + n/p1)/2`.
    ThreeModFourSplit,
    /// `n ≡ 3 (mod 4)` and (`p1² | n` or `n` prime):
    /// `⌊n(n-1)/4⌋ + 1 - (n/p1 + 1)/2`. Prime `n` falls here, where the
    /// value coincides with `⌊n(n-1)/4⌋`.
    ThreeModFourSquareOrPrime,
    /// `n ≡ 1 (mod 4)`, `3 | n`, `9 ∤ n`: `n(n-1)/4 - 1`.
    OneModFourThreeDivides,
    /// Every other odd `n`: `⌊n(n-1)/4⌋`.
    Otherwise,
}

/// Which case of the formula for [`l_c_star`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LcStarBranch {
    /// `n ≡ 0 (mod 4)`: `n²/4 - 1`.
    ZeroModFour,
    /// `n ≡ 1 (mod 4)`: `n(n-1)/4`.
    OneModFour,
    /// `n ≡ 2 (mod 4)`: `n(n-2)/4`.
    TwoModFour,
    /// `n ≡ 3 (mod 4)`: `n(n+1)/4 - 1`.
    ThreeModFour,
}

/// Value of [`l_c_star`] with its branch and, for `n = 4`, the attainable
/// minimum, which exceeds the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcStar {
    /// Formula value.
    pub value: u64,
    /// Case of the formula.
    pub branch: LcStarBranch,
    /// The smallest genus actually attainable (differs only at `n = 4`).
    pub attainable: u64,
}

/// Evaluated bounds for one `n` together with the supporting quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    /// The order n.
    pub n: u64,
    /// [`l_c`] (for `n = 2` the even-case formula, which gives 0).
    pub l_c: u64,
    /// Case of [`l_c`] that fired.
    pub branch_l_c: LcBranch,
    /// Formula value of [`l_c_star`].
    pub l_c_star: u64,
    /// Attainable minimum in the 3-dimensional model.
    pub l_c_star_attainable: u64,
    /// Case of [`l_c_star`] that fired.
    pub branch_l_c_star: LcStarBranch,
    /// [`l_c_star_tilde`].
    pub l_c_star_tilde: u64,
    /// Smallest prime divisor of n.
    pub p1: Option<u64>,
    /// `(p, q)` from [`choose_pq`] when `n ≡ 3 (mod 4)` is composite.
    pub pq: Option<(u64, u64)>,
    /// `(g1, g2)` from [`solve_g1g2`] when `pq` is present, or the
    /// `(3, n/3)`-order pair used when `n ≡ 1 (mod 4)`, `3 | n`, `9 ∤ n`.
    pub g1g2: Option<(u64, u64)>,
}

/// `⌊n(n-1)/4⌋`.
pub fn floor_quarter(n: u64) -> u64 {
    n * (n - 1) / 4
}

/// Case selection for [`l_c`].
pub fn l_c_branch(n: u64) -> Result<LcBranch> {
    if n < 2 {
        return domain(format!("L_C needs n >= 2, got {n}"));
    }
    if n.is_multiple_of(2) {
        return Ok(LcBranch::Even);
    }
    let p1 = smallest_prime_divisor(n)?;
    if n % 4 == 3 {
        if p1 != n && !n.is_multiple_of(p1 * p1) {
            return Ok(LcBranch::ThreeModFourSplit);
        }
        return Ok(LcBranch::ThreeModFourSquareOrPrime);
    }
    if n.is_multiple_of(3) && !n.is_multiple_of(9) {
        return Ok(LcBranch::OneModFourThreeDivides);
    }
    Ok(LcBranch::Otherwise)
}

/// Lower bound (attained) on the genus of a cyclically symmetric K_{n,n}
/// embedding with a Hamiltonian face, for `n >= 3`.
pub fn l_c(n: u64) -> Result<(u64, LcBranch)> {
    if n < 3 {
        return domain(format!("L_C is defined for n >= 3, got {n}"));
    }
    l_c_unchecked(n)
}

fn l_c_unchecked(n: u64) -> Result<(u64, LcBranch)> {
    let branch = l_c_branch(n)?;
    let p1 = smallest_prime_divisor(n)?;
    let v = match branch {
        LcBranch::Even => n * (n - 2) / 4,
        LcBranch::ThreeModFourSplit => floor_quarter(n) + 1 - (p1 + n / p1) / 2,
        LcBranch::ThreeModFourSquareOrPrime => floor_quarter(n) + 1 - (n / p1).div_ceil(2),
        LcBranch::OneModFourThreeDivides => n * (n - 1) / 4 - 1,
        LcBranch::Otherwise => floor_quarter(n),
    };
    Ok((v, branch))
}

/// Lower bound on the genus in the 3-dimensional model, `n >= 2`.
pub fn l_c_star(n: u64) -> Result<LcStar> {
    if n < 2 {
        return domain(format!("L_C* is defined for n >= 2, got {n}"));
    }
    let (value, branch) = match n % 4 {
        0 => (n * n / 4 - 1, LcStarBranch::ZeroModFour),
        1 => (n * (n - 1) / 4, LcStarBranch::OneModFour),
        2 => (n * (n - 2) / 4, LcStarBranch::TwoModFour),
        _ => (n * (n + 1) / 4 - 1, LcStarBranch::ThreeModFour),
    };
    let attainable = if n == 4 { 4 } else { value };
    Ok(LcStar {
        value,
        branch,
        attainable,
    })
}

/// Lower bound on the genus in the 3-dimensional model when the rotation
/// axis need not meet the surface, `n >= 2`.
pub fn l_c_star_tilde(n: u64) -> Result<u64> {
    if n < 2 {
        return domain(format!(
            "the fixed-point-free bound is defined for n >= 2, got {n}"
        ));
    }
    Ok(match n % 4 {
        0 => (n - 2) * (n - 2) / 4,
        1 => n * (n - 1) / 4,
        2 => n * (n - 2) / 4,
        _ => (n * n - 3 * n + 4) / 4,
    })
}

/// Contribution of a base face of size `k` and net voltage `h` to the
/// excess `Σ (size - 4)` of the derived embedding: `n·k - 4n/|h|`.
pub fn face_excess(size: u64, voltage: CyclicElement) -> i64 {
    let n = voltage.modulus as i64;
    n * size as i64 - 4 * n / voltage.order() as i64
}

/// Total excess `Σ (size - 4)` of a K_{n,n} embedding of genus `g`:
/// `8g - 2n² + 8n - 8`.
pub fn aggregate_excess(n: u64, genus: u64) -> i64 {
    let n = n as i64;
    8 * genus as i64 - 2 * n * n + 8 * n - 8
}

/// Residue condition on the excess for odd `n`: the quantity
/// `6n - 8 - ex` (for `n ≡ 1 mod 4`) or `6n - 12 - ex` (for `n ≡ 3 mod 4`)
/// must vanish mod 8. Returns `None` for even `n`, where no such
/// condition is used.
pub fn excess_residue_ok(n: u64, excess: i64) -> Option<bool> {
    let n_i = n as i64;
    match n % 4 {
        1 => Some((6 * n_i - 8 - excess).rem_euclid(8) == 0),
        3 => Some((6 * n_i - 12 - excess).rem_euclid(8) == 0),
        _ => None,
    }
}

/// The pair of orders `(p, q)` used for composite `n ≡ 3 (mod 4)`:
/// `(p1, n/p1)` if `p1² ∤ n`, else `(p1, n)`.
pub fn choose_pq(n: u64) -> Result<(u64, u64)> {
    if n % 4 != 3 {
        return domain(format!("choose_pq needs n ≡ 3 (mod 4), got {n}"));
    }
    let p1 = smallest_prime_divisor(n)?;
    if p1 == n {
        return domain(format!("choose_pq needs composite n, {n} is prime"));
    }
    Ok(if !n.is_multiple_of(p1 * p1) {
        (p1, n / p1)
    } else {
        (p1, n)
    })
}

/// Smallest `g1 >= 0` with `|g1| = p` such that `g2 = -1 - g1` has
/// `|g2| = q`.
pub fn solve_g1g2(n: u64, p: u64, q: u64) -> Result<(u64, u64)> {
    if p == 0 || q == 0 || !n.is_multiple_of(p) || !n.is_multiple_of(q) || gcd(n / p, n / q) != 1 {
        return domain(format!(
            "solve_g1g2 needs p, q | n with gcd(n/p, n/q) = 1; got n={n} p={p} q={q}"
        ));
    }
    (0..n)
        .find_map(|g1| {
            let g2 = (2 * n - 1 - g1) % n;
            (zn_order(g1 as i64, n) == p && zn_order(g2 as i64, n) == q).then_some((g1, g2))
        })
        .ok_or_else(|| {
            Error::Infeasible(format!(
                "no g1 of order {p} with -1-g1 of order {q} in Z_{n}"
            ))
        })
}

/// Evaluates every bound for `n >= 2`.
pub fn bounds_report(n: u64) -> Result<BoundsReport> {
    let (l_c, branch_l_c) = l_c_unchecked(n)?;
    let star = l_c_star(n)?;
    let p1 = smallest_prime_divisor(n)?;
    let (pq, g1g2) = match branch_l_c {
        LcBranch::ThreeModFourSplit | LcBranch::ThreeModFourSquareOrPrime if p1 != n => {
            let (p, q) = choose_pq(n)?;
            (Some((p, q)), Some(solve_g1g2(n, p, q)?))
        }
        LcBranch::OneModFourThreeDivides => (Some((3, n / 3)), Some(solve_g1g2(n, 3, n / 3)?)),
        _ => (None, None),
    };
    Ok(BoundsReport {
        n,
        l_c,
        branch_l_c,
        l_c_star: star.value,
        l_c_star_attainable: star.attainable,
        branch_l_c_star: star.branch,
        l_c_star_tilde: l_c_star_tilde(n)?,
        p1: Some(p1),
        pq,
        g1g2,
    })
}
