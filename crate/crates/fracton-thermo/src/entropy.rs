//! Fractal von Neumann entropy and the statistical weight it descends from.

use crate::distribution::ClassParam;
use crate::error::{Result, ThermoError};

/// Entropy per state `S/K` at mean occupation `n`:
///
/// `[1+(h−1)n]·ln{[1+(h−1)n]/n} − [1+(h−2)n]·ln{[1+(h−2)n]/n}`.
///
/// `n` must lie in `(0, 1/(2−h))`; any `n > 0` is physical for bosons.
pub fn entropy_per_state(h: ClassParam, n: f64) -> Result<f64> {
    let hv = h.value();
    let max = h.max_occupation();
    if !(n > 0.0 && n < max && n.is_finite()) {
        return Err(ThermoError::UnphysicalOccupation { h: hv, n, max });
    }
    let inv = 1.0 / n;
    let upper = 1.0 + (hv - 1.0) * n;
    let lower = 1.0 + (hv - 2.0) * n;
    Ok(upper * (inv + hv - 1.0).ln() - lower * (inv + hv - 2.0).ln())
}

/// `ln W` for `N` particles in `G` states, with the factorials continued
/// through `ln Γ(x + 1)`:
///
/// `W = [G + (N−1)(h−1)]! / (N! · [G + (N−1)(h−1) − N]!)`.
pub fn log_statistical_weight(h: ClassParam, g: u64, n: u64) -> Result<f64> {
    let hv = h.value();
    let (gf, nf) = (g as f64, n as f64);
    let top = gf + (nf - 1.0) * (hv - 1.0);
    let rest = top - nf;
    let check = |term, arg: f64| {
        // tolerate round-off just below zero (h = 1, N = G gives exactly 0)
        if arg < -1e-9 * gf.max(1.0) {
            Err(ThermoError::InvalidOccupancy {
                h: hv,
                g,
                n,
                term,
                arg,
            })
        } else {
            Ok(arg.max(0.0))
        }
    };
    let top = check("G+(N-1)(h-1)", top)?;
    let rest = check("G+(N-1)(h-1)-N", rest)?;
    Ok(ln_factorial(top) - ln_factorial(nf) - ln_factorial(rest))
}

fn ln_factorial(x: f64) -> f64 {
    libm::lgamma(x + 1.0)
}
