use std::fmt;

use serde::Serialize;

use super::defect::{level_codim, level_separation_defect};
use super::{Level, TowerError, TruncatedTower};
use crate::config::Limits;
use crate::findim::is_nilpotent;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOptions {
    /// Filtration index for the separation defect.
    pub defect_n: usize,
    /// Largest `d` tried before reporting the defect as infinite.
    pub d_max: usize,
}

impl ReportOptions {
    /// `n = 2`, with `d` as large as the enumeration cap allows.
    pub fn new(limits: &Limits) -> Self {
        ReportOptions { defect_n: 2, d_max: limits.max_enumeration_length.saturating_sub(2) }
    }
}

/// One row of the table. `defect: None` means no `d <= d_max` works;
/// `diagrank` is absent for families without a diagonal element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    pub dim: usize,
    pub nilindex: Option<usize>,
    /// Codimensions of `S_(1), ..., S_(nilindex)`.
    pub codim: Vec<usize>,
    pub defect: Option<usize>,
    pub diagrank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub family: String,
    pub field: String,
    pub defect_n: usize,
    pub d_max: usize,
    pub levels: Vec<LevelReport>,
}

fn level_report(level: &Level<'_>, opts: &ReportOptions) -> Result<LevelReport, TowerError> {
    let alg = level.algebra();
    let nilindex = is_nilpotent(alg).1;
    let depth = nilindex.unwrap_or(1);
    let mut codim = Vec::with_capacity(depth);
    for n in 1..=depth {
        let entry = level_codim(level, n);
        if !entry.complement_ok {
            return Err(TowerError::InvalidArgument(format!(
                "short monomials do not span a complement of S_({n}) at level {}",
                level.index()
            )));
        }
        codim.push(entry.codim);
    }
    let diagrank = if level.family().is_pqr() { Some(level.r_rank(&level.diagonal()?)?) } else { None };
    Ok(LevelReport {
        level: level.index(),
        dim: alg.dim(),
        nilindex,
        codim,
        defect: level_separation_defect(level, opts.defect_n, opts.d_max),
        diagrank,
    })
}

/// Per-level diagnostics, computed concurrently and listed by level.
pub fn tower_report(tower: &TruncatedTower, opts: &ReportOptions, limits: &Limits) -> Result<TowerReport, TowerError> {
    if opts.defect_n < 2 {
        return Err(TowerError::InvalidArgument(format!("the separation defect needs n >= 2, got {}", opts.defect_n)));
    }
    if opts.defect_n + opts.d_max > limits.max_enumeration_length {
        return Err(TowerError::EnumerationCap {
            length: opts.defect_n + opts.d_max,
            cap: limits.max_enumeration_length,
        });
    }
    let levels: Vec<Level<'_>> = tower.levels().collect();
    let rows = std::thread::scope(|s| {
        let handles: Vec<_> = levels.iter().map(|l| s.spawn(move || level_report(l, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("level report panicked")).collect::<Result<Vec<_>, _>>()
    })?;
    Ok(TowerReport {
        family: tower.family().to_string(),
        field: tower.field().to_string(),
        defect_n: opts.defect_n,
        d_max: opts.d_max,
        levels: rows,
    })
}

fn opt(x: Option<usize>, none: &str) -> String {
    x.map_or_else(|| none.to_string(), |v| v.to_string())
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tower {} over {} (defect at n = {}, d <= {})", self.family, self.field, self.defect_n, self.d_max)?;
        let header = ["level", "dim", "nilindex", "defect", "diagrank", "codim"];
        let rows: Vec<[String; 6]> = self
            .levels
            .iter()
            .map(|r| {
                let codim: Vec<String> = r.codim.iter().map(|c| c.to_string()).collect();
                [
                    r.level.to_string(),
                    r.dim.to_string(),
                    opt(r.nilindex, "-"),
                    opt(r.defect, "inf"),
                    opt(r.diagrank, "-"),
                    codim.join(","),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: [&str; 6]| -> String {
            let mut parts: Vec<String> = cells[..5].iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            parts.push(cells[5].to_string());
            parts.join("  ")
        };
        writeln!(f, "{}", line(header))?;
        for row in &rows {
            writeln!(f, "{}", line([&row[0], &row[1], &row[2], &row[3], &row[4], &row[5]]))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::tower::Family;

    #[test]
    fn pqr_report() {
        let limits = Limits::default();
        let t = TruncatedTower::new(Family::Pqr, Field::Rationals, 2, 5, &limits).unwrap();
        let r = tower_report(&t, &ReportOptions::new(&limits), &limits).unwrap();
        assert_eq!(r.levels.len(), 4);
        for row in &r.levels {
            let i = row.level;
            assert_eq!(row.nilindex, Some(2 * i + 1));
            assert_eq!(row.diagrank, Some(i - 1));
            assert_eq!(row.codim[0], 0);
            assert_eq!(row.codim[1], 1);
            assert_eq!(*row.codim.last().unwrap(), row.dim);
        }
        let text = r.to_string();
        assert!(text.lines().nth(1).unwrap().starts_with("level"));
        assert_eq!(text.lines().count(), 6);
    }
}
