//! Cross-checks of the series engine against brute-force enumeration.

use std::fmt::Write as _;

use crate::error::Result;
use crate::multiset::{h2, h_all};
use crate::oracle::Enumerator;
use crate::trees::{series_for, TreeFamily};
use crate::{Coefficient, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountCheck {
    pub family: TreeFamily,
    pub n: usize,
    pub series: Coefficient,
    pub oracle: Coefficient,
}

impl CountCheck {
    pub fn agrees(&self) -> bool {
        self.series == self.oracle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    /// Informational checks are reported but never fail the run.
    pub gating: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: usize,
    pub counts: Vec<CountCheck>,
    pub identities: Vec<IdentityCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counts.iter().all(CountCheck::agrees)
            && self.identities.iter().filter(|c| c.gating).all(|c| c.holds)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<24} {:>3} {:>12} {:>12}  status",
            "family", "n", "series", "oracle"
        );
        for c in &self.counts {
            let status = if c.agrees() { "ok" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "{:<24} {:>3} {:>12} {:>12}  {}",
                c.family.tag(),
                c.n,
                c.series,
                c.oracle,
                status
            );
        }
        for c in self.counts.iter().filter(|c| !c.agrees()) {
            let _ = writeln!(
                out,
                "FAIL {} n={}: series {} != oracle {}",
                c.family, c.n, c.series, c.oracle
            );
        }
        for id in &self.identities {
            let verdict = match (id.holds, id.gating) {
                (true, _) => "ok",
                (false, true) => "FAIL",
                (false, false) => "does not hold (informational)",
            };
            let _ = writeln!(
                out,
                "identity {} at order {}: {}",
                id.name, self.max_n, verdict
            );
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Compare every family's series against the oracle for `n <= max_n`, then
/// check the algebraic identities at order `max_n`.
pub fn verify(max_n: usize, cap: usize) -> Result<VerifyReport> {
    verify_with(max_n, cap, series_for)
}

/// Like [`verify`], with the series supplied by `series` so a faulty engine
/// can be substituted.
pub fn verify_with(
    max_n: usize,
    cap: usize,
    series: impl Fn(TreeFamily, usize) -> Result<Series>,
) -> Result<VerifyReport> {
    let mut enumerator = Enumerator::new(cap);
    // fail fast on the cap before doing any work
    enumerator.rooted(max_n)?;

    let mut counts = Vec::new();
    for family in TreeFamily::ALL {
        let s = series(family, max_n)?;
        for n in 1..=max_n {
            counts.push(CountCheck {
                family,
                n,
                series: s.coeff(n),
                oracle: enumerator.count(family, n)?,
            });
        }
    }

    let order = max_n;
    let r = series(TreeFamily::Rooted, order)?;
    let u = series(TreeFamily::Unrooted, order)?;
    let s = series(TreeFamily::STree, order)?;
    let hit = series(TreeFamily::Hit, order)?;
    let vertex = series(TreeFamily::HitVertexRooted, order)?;
    let edge = series(TreeFamily::HitEdgeRooted, order)?;
    let vertex_edge = series(TreeFamily::HitVertexEdgeRooted, order)?;
    let one_plus_x = &Series::one(order) + &Series::x(order);

    let identities = vec![
        IdentityCheck {
            name: "u = r + h2[r] - r^2",
            holds: u == &(&r + &h2(&r)) - &(&r * &r),
            gating: true,
        },
        IdentityCheck {
            name: "hit = t_vertex + t_edge - t_vertex_edge",
            holds: hit == &(&vertex + &edge) - &vertex_edge,
            gating: true,
        },
        IdentityCheck {
            name: "(1+x) s = x h[s]",
            holds: &one_plus_x * &s == h_all(&s)?.shift(1),
            gating: true,
        },
        IdentityCheck {
            name: "s = r(x/(1+x))",
            holds: s == r.substitute(&Series::x_over_one_plus_x(order))?,
            gating: false,
        },
    ];

    Ok(VerifyReport {
        max_n,
        counts,
        identities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn small_verification_passes() {
        let report = verify(8, 16).unwrap();
        assert!(report.passed(), "{}", report.render());
        assert_eq!(report.counts.len(), 7 * 8);
        assert!(report.render().ends_with("PASS\n"));
    }

    #[test]
    fn single_vertex_is_trivial() {
        let report = verify(1, 16).unwrap();
        assert!(report.passed());
        assert!(report.identities.iter().all(|c| c.holds));
    }

    #[test]
    fn corrupted_series_fails() {
        let report = verify_with(6, 16, |family, order| {
            let mut s: Series = series_for(family, order)?;
            if family == TreeFamily::Unrooted {
                s = &s + &Series::monomial(1.into(), 5, order);
            }
            Ok(s)
        })
        .unwrap();
        assert!(!report.passed());
        let text = report.render();
        assert!(
            text.contains("FAIL unrooted n=5: series 4 != oracle 3"),
            "{text}"
        );
        assert!(text.contains("identity u = r + h2[r] - r^2 at order 6: FAIL"));
    }

    #[test]
    fn cap_is_checked_up_front() {
        assert_eq!(
            verify(9, 8).unwrap_err(),
            Error::CapExceeded { n: 9, cap: 8 }
        );
    }
}
