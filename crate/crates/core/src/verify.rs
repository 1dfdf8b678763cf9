//! DP-versus-oracle verification sweep.

use num_traits::Zero;

use crate::count::BigCount;
use crate::dp::{DpTables, RootedTable, RootedTotals};
use crate::error::Result;
use crate::family::{BoundMode, FamilyKey};
use crate::free::FreeCounter;
use crate::oracle::Oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub delta_max: usize,
    /// Corrupt one DP cell before checking, to prove the sweep notices.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            n_max: 8,
            delta_max: 4,
            inject_fault: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    /// Individual equalities checked.
    pub checks: usize,
    /// Rooted classes the oracle enumerated.
    pub classes: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn absorb(&mut self, other: VerifyReport) {
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

/// Run every check for `1 <= n <= n_max`, `0 <= delta <= delta_max`.
pub fn run(opts: VerifyOptions) -> Result<VerifyReport> {
    let VerifyOptions {
        n_max,
        delta_max,
        inject_fault,
    } = opts;
    let oracle = Oracle::build(n_max, delta_max)?;
    let mut tables = DpTables::build(n_max, delta_max)?;
    if inject_fault {
        let key = FamilyKey::new(BoundMode::Eee, n_max, delta_max, n_max - 1, 0, 0)?;
        let bumped = tables.cell(key) + 1u8;
        tables.poke(key, bumped);
    }

    let mut report = VerifyReport::default();
    for n in 1..=n_max {
        for d in 0..=delta_max {
            report.classes += oracle.rooted(n, d).len();
        }
    }
    report.absorb(check_cells_against_oracle(&tables, &oracle));
    report.absorb(check_identities(&tables));

    let compact = RootedTotals::build(n_max, delta_max)?;
    for i in 1..=n_max {
        for j in 0..=delta_max {
            for w in 0..i {
                report.check(
                    tables.bounded_by_child_size(i, j, w) == compact.bounded_by_child_size(i, j, w),
                    || format!("compact fill differs from dense tables at LLL(i={i}, j={j}, w={w}, u={j}, v={j})"),
                );
            }
        }
    }

    let counter = FreeCounter::new(n_max, delta_max)?;
    for n in 1..=n_max {
        for d in 0..=delta_max {
            let dp = counter.free(n, d)?.total;
            let truth = BigCount::from(oracle.count_free(n, d)?);
            report.check(dp == truth, || {
                format!("free count (n={n}, delta={d}): dp {dp}, oracle {truth}")
            });
        }
    }
    Ok(report)
}

/// Every stored cell of every mode against the oracle's filtered count.
pub fn check_cells_against_oracle(tables: &DpTables, oracle: &Oracle) -> VerifyReport {
    let mut report = VerifyReport::default();
    let n_max = tables.n_cap().min(oracle.n_cap());
    let delta_max = tables.delta_cap().min(oracle.delta_cap());
    for i in 1..=n_max {
        for j in 0..=delta_max {
            let stats: Vec<_> = oracle.rooted(i, j).iter().map(|g| g.stats()).collect();
            for w in 0..i {
                for u in 0..=j {
                    for v in 0..=j {
                        for mode in BoundMode::ALL {
                            let key = FamilyKey { i, j, w, u, v, mode };
                            let truth = stats.iter().filter(|s| mode.admits(**s, w, u, v)).count();
                            let dp = tables.cell(key);
                            report.check(*dp == BigCount::from(truth), || {
                                format!("cell {key}: dp {dp}, oracle {truth}")
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// Partition identities, their telescoped sums, monotonicity of `LLL`, and
/// the structurally empty families.
pub fn check_identities(t: &DpTables) -> VerifyReport {
    use BoundMode::*;
    let mut r = VerifyReport::default();
    let c = |mode, i, j, w, u, v| t.cell(FamilyKey { i, j, w, u, v, mode });
    for i in 1..=t.n_cap() {
        for j in 0..=t.delta_cap() {
            for w in 0..i {
                for u in 0..=j {
                    for v in 0..=j {
                        let at = || format!("(i={i}, j={j}, w={w}, u={u}, v={v})");
                        let below_w = if w > 0 {
                            c(Lll, i, j, w - 1, u, v).clone()
                        } else {
                            BigCount::zero()
                        };
                        r.check(*c(Lll, i, j, w, u, v) == below_w + c(Ell, i, j, w, u, v), || {
                            format!("LLL = LLL(w-1) + ELL fails at {}", at())
                        });
                        let below_u = if u > 0 {
                            c(Ell, i, j, w, u - 1, v).clone()
                        } else {
                            BigCount::zero()
                        };
                        r.check(*c(Ell, i, j, w, u, v) == below_u + c(Eel, i, j, w, u, v), || {
                            format!("ELL = ELL(u-1) + EEL fails at {}", at())
                        });
                        let below_v = if v > 0 {
                            c(Eel, i, j, w, u, v - 1).clone()
                        } else {
                            BigCount::zero()
                        };
                        r.check(*c(Eel, i, j, w, u, v) == below_v + c(Eee, i, j, w, u, v), || {
                            format!("EEL = EEL(v-1) + EEE fails at {}", at())
                        });

                        let sum_w: BigCount = (0..=w).map(|x| c(Ell, i, j, x, u, v)).sum();
                        let sum_u: BigCount = (0..=u).map(|x| c(Eel, i, j, w, x, v)).sum();
                        let sum_v: BigCount = (0..=v).map(|x| c(Eee, i, j, w, u, x)).sum();
                        r.check(*c(Lll, i, j, w, u, v) == sum_w, || {
                            format!("LLL telescoping over w fails at {}", at())
                        });
                        r.check(*c(Ell, i, j, w, u, v) == sum_u, || {
                            format!("ELL telescoping over u fails at {}", at())
                        });
                        r.check(*c(Eel, i, j, w, u, v) == sum_v, || {
                            format!("EEL telescoping over v fails at {}", at())
                        });

                        if w > 0 {
                            r.check(c(Lll, i, j, w, u, v) >= c(Lll, i, j, w - 1, u, v), || {
                                format!("LLL decreases in w at {}", at())
                            });
                        }
                        if u > 0 {
                            r.check(c(Lll, i, j, w, u, v) >= c(Lll, i, j, w, u - 1, v), || {
                                format!("LLL decreases in u at {}", at())
                            });
                        }
                        if v > 0 {
                            r.check(c(Lll, i, j, w, u, v) >= c(Lll, i, j, w, u, v - 1), || {
                                format!("LLL decreases in v at {}", at())
                            });
                        }

                        if u + v > j {
                            r.check(c(Eee, i, j, w, u, v).is_zero(), || {
                                format!("EEE non-zero with u+v>j at {}", at())
                            });
                        }
                        if w == 1 && u >= 1 {
                            r.check(c(Eee, i, j, w, u, v).is_zero(), || {
                                format!("EEE non-zero with w=1, u>=1 at {}", at())
                            });
                        }
                        if w == 1 && u == 0 && v == 0 && j >= 1 {
                            r.check(c(Eee, i, j, w, u, v).is_zero(), || {
                                format!("EEE non-zero with w=1, u=v=0, j>=1 at {}", at())
                            });
                        }
                        if w == 0 && i >= 2 {
                            for mode in BoundMode::ALL {
                                r.check(c(mode, i, j, w, u, v).is_zero(), || {
                                    format!("{mode} non-zero with w=0, i>=2 at {}", at())
                                });
                            }
                        }
                    }
                }
            }
            // families needing a child at least as large as the whole graph
            for w in i..i + 2 {
                for mode in [Ell, Eel, Eee] {
                    let empty = t.value(mode, i, j, w, 0, j).map(|x| x.is_zero()).unwrap_or(false);
                    r.check(empty, || {
                        format!("{mode} non-zero with w >= i at (i={i}, j={j}, w={w})")
                    });
                }
            }
        }
    }
    r
}
