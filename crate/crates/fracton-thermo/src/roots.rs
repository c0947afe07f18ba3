//! Bracketed root finding for monotone increasing functions.

/// Outcome of a failed solve: the tightest bracket reached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unconverged {
    pub iterations: usize,
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct NewtonBisect {
    /// Stop once `|f(x)| <= f_tol`.
    pub f_tol: f64,
    pub max_iter: usize,
}

impl Default for NewtonBisect {
    fn default() -> Self {
        Self {
            f_tol: 0.0,
            max_iter: 200,
        }
    }
}

impl NewtonBisect {
    /// Finds the root of an increasing `f` inside `[lo, hi]` with
    /// `f(lo) <= 0 <= f(hi)`. `eval` returns `(f(x), f'(x))`.
    ///
    /// Newton steps are taken from the current iterate and replaced by a
    /// bisection whenever they leave the bracket.
    pub fn solve<F>(
        &self,
        mut eval: F,
        mut lo: f64,
        mut hi: f64,
        start: f64,
    ) -> Result<f64, Unconverged>
    where
        F: FnMut(f64) -> (f64, f64),
    {
        let mut x = if start > lo && start < hi {
            start
        } else {
            0.5 * (lo + hi)
        };
        let mut best = (f64::INFINITY, x);
        for _ in 0..self.max_iter {
            let (fx, dfx) = eval(x);
            if fx.abs() < best.0 {
                best = (fx.abs(), x);
            }
            if fx == 0.0 || fx.abs() <= self.f_tol {
                return Ok(x);
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                // bracket exhausted at floating-point resolution
                return Ok(best.1);
            }
            let newton = x - fx / dfx;
            x = if newton.is_finite() && newton > lo && newton < hi {
                newton
            } else {
                mid
            };
        }
        Err(Unconverged {
            iterations: self.max_iter,
            lo,
            hi,
        })
    }
}

/// Grows `[lo, hi]` around `guess` until an increasing `f` changes sign.
pub fn expand_bracket<F>(mut f: F, guess: f64, max_doublings: usize) -> Option<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = (guess - 1.0, guess + 1.0);
    let mut step = 1.0;
    for _ in 0..max_doublings {
        if f(lo) > 0.0 {
            hi = lo;
            lo -= step;
        } else if f(hi) < 0.0 {
            lo = hi;
            hi += step;
        } else {
            return Some((lo, hi));
        }
        step *= 2.0;
    }
    None
}
