//! Index bookkeeping for a Borel–Le Potier spectral sequence over a
//! Grassmann bundle.
//!
//! For a Grassmann bundle Y = G_r(E) over an n-fold X, the spectral sequence
//! of the fibration filters P-forms on Y by base degree. This module computes
//! the combinatorial shadow of that machinery, with hook Schur functors
//! `Γ^{α,k}` appearing fiberwise:
//!
//! - [`e1_term`] — which first-page cells carry cohomology of `Γ^{α,k}E` and
//!   with which twist degree `j(p)`;
//! - [`dm_targets`] — the bidegrees hit by the page-m connecting morphisms;
//! - [`capital_q`] — the bound `Q(x, α) = x + (δ(x)+α)(e−k+2α) − α(α+1)`
//!   controlling which `(p, q)` survive;
//! - [`identity_residuals`] — the telescoping identities that compare `Q`
//!   across a connecting-morphism step (they must vanish identically);
//! - [`threshold_equivalence`] — agreement of the `Q`-bound with the
//!   Nakano-type positivity threshold upstairs on Y;
//! - [`minimal_l`] — the smallest twist multiplier `l` making the
//!   positivity argument applicable.
//!
//! Everything here is exact integer index calculus: no differentials are
//! evaluated and no cohomology dimensions are claimed.

use crate::partitions::delta;
use crate::{ensure, Error, Result};

/// Parameters of one spectral-sequence setup: base dimension `n`, bundle
/// rank `e`, quotient rank `r`, twist multiplier `l`, hook weight `k = l·r`,
/// and total form degree `P` on Y.
///
/// `P` must satisfy `P ≥ n + (l−1)·C(r+1,2) − l(r−1)`; below that bound the
/// first-page description used by [`e1_term`] does not apply, so
/// construction is rejected rather than extrapolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralParams {
    n: u64,
    e: u64,
    r: u64,
    l: u64,
    k: u64,
    big_p: u64,
}

/// `C(m, 2) = m(m-1)/2` as `i128`, safe for the whole `u64` range of `m`.
fn c2(m: u64) -> i128 {
    (m as i128) * (m as i128 - 1) / 2
}

impl SpectralParams {
    pub fn new(n: u64, e: u64, r: u64, l: u64, big_p: u64) -> Result<Self> {
        ensure!(n >= 1, "the base dimension n must be positive");
        ensure!(e >= 1, "the bundle rank e must be positive");
        ensure!(r >= 1, "the quotient rank r must be positive");
        ensure!(l >= 1, "the twist multiplier l must be positive");
        let k = l.checked_mul(r).ok_or(Error::Overflow("k = l·r"))?;
        let bound = n as i128 + (l as i128 - 1) * c2(r + 1) - l as i128 * (r as i128 - 1);
        ensure!(
            big_p as i128 >= bound,
            "form degree P={big_p} is below the validity bound {bound} for n={n}, r={r}, l={l}"
        );
        Ok(Self {
            n,
            e,
            r,
            l,
            k,
            big_p,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// The hook weight `k = l·r`.
    pub fn k(&self) -> u64 {
        self.k
    }

    /// The total form degree `P` on the Grassmann bundle.
    pub fn big_p(&self) -> u64 {
        self.big_p
    }

    /// `dim Y = n + r(e−r)`, as a signed integer (negative `e−r` signals a
    /// degenerate setup but is representable).
    pub fn dim_y(&self) -> i64 {
        (self.n as i128 + self.r as i128 * (self.e as i128 - self.r as i128))
            .try_into()
            .expect("dim Y fits in i64")
    }
}

/// Outcome of a first-page cell: either nothing, or the cohomology of
/// `Γ^{α,k}E` shifted by `j(p)` in the fiber direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralCell {
    Zero,
    Cohomology { alpha_p: u64, j_p: u64 },
}

impl SpectralCell {
    pub fn is_zero(&self) -> bool {
        matches!(self, SpectralCell::Zero)
    }
}

/// The first-page term in base degree `p`: nonzero exactly when
/// `α(p) = ((l−1)·C(r+1,2) − (P−p)) / r` is a non-negative integer and
/// `0 ≤ p ≤ n`, in which case the fiber shift is
/// `j(p) = (l−1)·C(r,2) − (r−1)·α(p)`.
///
/// The division by `r` makes the cell grid coherent with [`dm_targets`]: a
/// connecting-morphism step of `μr` in `p` moves `α` by exactly `μ`.
pub fn e1_term(params: &SpectralParams, p: i64) -> SpectralCell {
    if p < 0 || p as i128 > params.n as i128 {
        return SpectralCell::Zero;
    }
    let num = (params.l as i128 - 1) * c2(params.r + 1) - (params.big_p as i128 - p as i128);
    if num < 0 || num % params.r as i128 != 0 {
        return SpectralCell::Zero;
    }
    let alpha_p = num / params.r as i128;
    let j_p = (params.l as i128 - 1) * c2(params.r) - (params.r as i128 - 1) * alpha_p;
    // j(p) ≥ 0 is forced by the validity bound on P together with p ≤ n:
    // α(p) ≤ l(r−1)/r, and (l−1)·C(r,2) − (r−1)·l(r−1)/r ≥ 0 for all l, r ≥ 1.
    debug_assert!(j_p >= 0);
    SpectralCell::Cohomology {
        alpha_p: alpha_p.try_into().expect("alpha(p) fits in u64"),
        j_p: j_p.try_into().expect("j(p) fits in u64"),
    }
}

/// Bidegrees hit by the two page-m connecting morphisms out of `(p, q)`,
/// for `m = μr`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DmTargets {
    pub right: (i64, i64),
    pub left: (i64, i64),
}

/// Connecting-morphism targets on page `m = μr`: the outgoing differential
/// lands at `(p + μr, q + μ(r−1) + 1)` and the incoming one originates at
/// `(p − μr, q − μ(r−1) − 1)`. Coordinates may leave the first quadrant;
/// negative values simply name cells that are zero for degree reasons.
pub fn dm_targets(p: i64, q: i64, r: u64, mu: u64) -> Result<DmTargets> {
    ensure!(r >= 1, "the quotient rank r must be positive");
    ensure!(mu >= 1, "the page multiplier mu must be positive");
    let step_p = (mu as i128) * (r as i128);
    let step_q = (mu as i128) * (r as i128 - 1) + 1;
    let shift = |base: i64, step: i128| -> Result<i64> {
        i64::try_from(base as i128 + step).map_err(|_| Error::Overflow("d_m target"))
    };
    Ok(DmTargets {
        right: (shift(p, step_p)?, shift(q, step_q)?),
        left: (shift(p, -step_p)?, shift(q, -step_q)?),
    })
}

fn q128(x: u64, alpha: u64, e: i64, k: i64) -> i128 {
    let (a, d) = (alpha as i128, delta(x) as i128);
    x as i128 + (d + a) * (e as i128 - k as i128 + 2 * a) - a * (a + 1)
}

/// The survival bound `Q(x, α) = x + (δ(x)+α)(e−k+2α) − α(α+1)`: cohomology
/// in bidegree `(p, q)` with `x = n−p` dies on some page once `q > Q(x, α)`.
///
/// The result is exact; inputs large enough to overflow `i64` panic rather
/// than wrap.
pub fn capital_q(x: u64, alpha: u64, e: i64, k: i64) -> i64 {
    q128(x, alpha, e, k).try_into().expect("Q fits in i64")
}

/// Residuals of the two telescoping identities, each present only when its
/// side condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityResiduals {
    pub res6: Option<i64>,
    pub res7: Option<i64>,
}

/// Residuals of the two identities comparing `Q` across a page-`μr`
/// connecting morphism; both are identically zero, so any nonzero residual
/// indicates an implementation fault.
///
/// With `D = δ(x)`:
///
/// - descending (needs `x − μD ≥ 0`):
///   `Q(x,α) − Q(x−μD, α+μ) + μ(D−1) + 1
///      = (e−k+2(α+μ))·(D−μ−δ(x−μD)) + μ² + 1`;
/// - ascending (needs `α − μ ≥ 0`):
///   `Q(x,α) − Q(x+μD, α−μ) − μ(D−1) − 1
///      = (e−k+2(α−μ))·(D+μ−δ(x+μD)) + μ² − 1`.
///
/// A residual whose side condition fails is reported as absent rather than
/// extrapolated.
pub fn identity_residuals(
    x: u64,
    alpha: u64,
    mu: u64,
    e: i64,
    k: i64,
) -> Result<IdentityResiduals> {
    ensure!(mu >= 1, "the page multiplier mu must be positive");
    let d = delta(x);
    let (a, m, d_i) = (alpha as i128, mu as i128, d as i128);
    let step = (mu as u128) * (d as u128);

    let res6 = (x as u128 >= step).then(|| {
        let x_down = x - (step as u64);
        let lhs = q128(x, alpha, e, k) - q128(x_down, alpha + mu, e, k) + m * (d_i - 1) + 1;
        let rhs =
            (e as i128 - k as i128 + 2 * (a + m)) * (d_i - m - delta(x_down) as i128) + m * m + 1;
        i64::try_from(lhs - rhs).expect("residual fits in i64")
    });

    let res7 = if alpha >= mu {
        let x_up = x
            .checked_add(u64::try_from(step).map_err(|_| Error::Overflow("x + mu*delta(x)"))?)
            .ok_or(Error::Overflow("x + mu*delta(x)"))?;
        let lhs = q128(x, alpha, e, k) - q128(x_up, alpha - mu, e, k) - m * (d_i - 1) - 1;
        let rhs =
            (e as i128 - k as i128 + 2 * (a - m)) * (d_i + m - delta(x_up) as i128) + m * m - 1;
        Some(i64::try_from(lhs - rhs).expect("residual fits in i64"))
    } else {
        None
    };

    Ok(IdentityResiduals { res6, res7 })
}

/// Checks that the downstairs bound `q > Q(n−p, α)` agrees with the
/// upstairs Nakano-type threshold `P + q + j(p) − dim Y > α(e−k+α)`, where
/// `P = p + (l−1)·C(r+1,2) − αr`, `j(p) = (l−1)·C(r,2) − (r−1)α`, and
/// `dim Y = n + r(e−r)`.
///
/// With the proof's choice `r = δ(n−p)` the two inequalities are equivalent
/// as a polynomial identity, so the result is `true` for every `q`. The
/// choice of `r` is enforced for `p < n`; at `p = n` the argument places no
/// constraint on `r` and any positive value is accepted.
#[allow(clippy::too_many_arguments)]
pub fn threshold_equivalence(
    n: u64,
    p: u64,
    q: u64,
    alpha: u64,
    e: u64,
    k: u64,
    l: u64,
    r: u64,
) -> Result<bool> {
    ensure!(n >= 1, "the base dimension n must be positive");
    ensure!(p <= n, "need p <= n, got p={p}, n={n}");
    ensure!(e >= 1, "the bundle rank e must be positive");
    ensure!(l >= 1 && r >= 1, "l and r must be positive");
    let lr = l.checked_mul(r).ok_or(Error::Overflow("k = l·r"))?;
    ensure!(k == lr, "inconsistent parameters: k={k} but l·r={lr}");
    if p < n {
        let d = delta(n - p);
        ensure!(
            r == d,
            "inconsistent parameters: the bound is proved with r = δ(n−p) = {d}, got r={r}"
        );
    }
    let e_i = i64::try_from(e).map_err(|_| Error::Overflow("e"))?;
    let k_i = i64::try_from(k).map_err(|_| Error::Overflow("k"))?;
    let downstairs = q as i128 > q128(n - p, alpha, e_i, k_i);

    let (a, li, ri) = (alpha as i128, l as i128, r as i128);
    let big_p = p as i128 + (li - 1) * c2(r + 1) - a * ri;
    let j_p = (li - 1) * c2(r) - (ri - 1) * a;
    let dim_y = n as i128 + ri * (e as i128 - ri);
    let upstairs = big_p + q as i128 + j_p - dim_y > a * (e as i128 - k as i128 + a);

    Ok(downstairs == upstairs)
}

/// The smallest twist multiplier usable in the positivity argument:
/// `⌈(rα + n − p) / (r−1)⌉` for `p < n`, and `1` for `p = n` where any
/// positive value works. The bound is undefined at `r = 1` with `p < n`.
pub fn minimal_l(r: u64, alpha: u64, n: u64, p: u64) -> Result<u64> {
    ensure!(n >= 1, "the base dimension n must be positive");
    ensure!(r >= 1, "the quotient rank r must be positive");
    ensure!(p <= n, "need p <= n, got p={p}, n={n}");
    if p == n {
        return Ok(1);
    }
    ensure!(
        r >= 2,
        "the bound (rα + n − p)/(r − 1) is undefined at r = 1"
    );
    let num = (r as u128) * (alpha as u128) + (n - p) as u128;
    let den = (r - 1) as u128;
    u64::try_from(num.div_ceil(den)).map_err(|_| Error::Overflow("minimal l"))
}
