//! Bracketing root isolation: uniform sign-change scan followed by bisection.

/// A bracket `[lo, hi]` across which the scanned function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

/// Scans `f` on `samples + 1` uniform nodes of `[lo, hi]` and returns every
/// interval with a sign change.  Nodes where `f` is not finite are skipped.
pub fn scan_sign_changes<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, samples: usize) -> Vec<Bracket> {
    assert!(samples >= 1 && hi > lo);
    let h = (hi - lo) / samples as f64;
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=samples {
        let x = lo + h * i as f64;
        let y = f(x);
        if !y.is_finite() {
            prev = None;
            continue;
        }
        if y == 0.0 {
            // Exact node root: synthesize a bracket around it and restart the
            // scan so the crossing is not counted twice.
            out.push(Bracket {
                lo: (x - h).max(lo),
                hi: (x + h).min(hi),
            });
            prev = None;
            continue;
        }
        if let Some((px, py)) = prev {
            if py.signum() != y.signum() {
                out.push(Bracket { lo: px, hi: x });
            }
        }
        prev = Some((x, y));
    }
    out
}

/// Refines a sign-change bracket by bisection down to floating-point
/// resolution (or 80 halvings, whichever comes first).
pub fn bisect<F: Fn(f64) -> f64>(f: F, bracket: Bracket) -> f64 {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    let fhi = f(hi);
    if fhi == 0.0 {
        return hi;
    }
    if flo.signum() == fhi.signum() {
        // Degenerate bracket from an exact node root: fall back to the best
        // sampled point.
        let mid = 0.5 * (lo + hi);
        let (mut best, mut fb) = (lo, flo.abs());
        for &(x, y) in &[(mid, f(mid).abs()), (hi, fhi.abs())] {
            if y < fb {
                best = x;
                fb = y;
            }
        }
        return best;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // no representable point strictly inside
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_simple_root() {
        let f = |x: f64| x * x - 2.0;
        let brackets = scan_sign_changes(f, 0.0, 2.0, 100);
        assert_eq!(brackets.len(), 1);
        let r = bisect(f, brackets[0]);
        assert!((r - 2.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn skips_singular_nodes() {
        let f = |x: f64| 1.0 / x - 2.0; // pole at 0, root at 0.5
        let brackets = scan_sign_changes(f, -1.0, 1.0, 1000);
        assert_eq!(brackets.len(), 1);
        let r = bisect(f, brackets[0]);
        assert!((r - 0.5).abs() < 1e-14);
    }

    #[test]
    fn no_root_means_no_brackets() {
        let f = |x: f64| x * x + 1.0;
        assert!(scan_sign_changes(f, -3.0, 3.0, 500).is_empty());
    }
}
