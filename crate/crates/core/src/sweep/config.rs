use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::angular::{DICKE_N_MAX, SPIN_MATRIX_N_MAX};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Rational expression in the reduced-matrix entries.
    Closed,
    /// Correlation matrix and transverse eigenvalue.
    Generic,
    /// Collective spin variance scan.
    Scan,
    /// Closed form alongside the scan, with their difference.
    Crosscheck,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "closed" => Ok(Mode::Closed),
            "generic" => Ok(Mode::Generic),
            "scan" => Ok(Mode::Scan),
            "crosscheck" => Ok(Mode::Crosscheck),
            _ => Err(format!(
                "unknown mode {s:?}, expected closed|generic|scan|crosscheck"
            )),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Closed => "closed",
            Mode::Generic => "generic",
            Mode::Scan => "scan",
            Mode::Crosscheck => "crosscheck",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?}, expected csv|json")),
        }
    }
}

/// Which k values to pair with each N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KSelection {
    /// `1..=floor(N/2)`, optionally capped.
    All {
        max: Option<usize>,
    },
    List(Vec<usize>),
}

impl KSelection {
    pub fn expand(&self, n: usize) -> Vec<usize> {
        match self {
            KSelection::All { max } => {
                let top = max.map_or(n / 2, |m| m.min(n / 2));
                (1..=top).collect()
            }
            KSelection::List(ks) => ks.clone(),
        }
    }
}

/// `steps` evenly spaced values from `start` to `stop` inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AGrid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl AGrid {
    pub fn values(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| match i {
                0 => self.start,
                i if i + 1 == self.steps => self.stop,
                i => {
                    let i = i as f64;
                    (((last - i) * self.start + i * self.stop) / last).clamp(self.start, self.stop)
                }
            })
            .collect()
    }
}

impl FromStr for AGrid {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let [start, stop, steps] = parts[..] else {
            return Err(format!("a-grid {s:?} must look like start:stop:steps"));
        };
        let start: f64 = start
            .parse()
            .map_err(|_| format!("bad a-grid start {start:?}"))?;
        let stop: f64 = stop
            .parse()
            .map_err(|_| format!("bad a-grid stop {stop:?}"))?;
        let steps: usize = steps
            .parse()
            .map_err(|_| format!("bad a-grid steps {steps:?}"))?;
        Ok(AGrid { start, stop, steps })
    }
}

/// Everything a sweep needs. Built from defaults, then a `key = value`
/// config file, then command-line overrides.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub n_list: Vec<usize>,
    pub k: KSelection,
    pub a_grid: AGrid,
    pub mode: Mode,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub scan_tolerance: f64,
    pub emit_plot: bool,
    pub squared: bool,
    pub jobs: Option<usize>,
    /// Largest oracle difference accepted in crosscheck mode.
    pub crosscheck_tolerance: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_list: (4..=100).collect(),
            k: KSelection::All { max: Some(5) },
            a_grid: AGrid {
                start: 0.0,
                stop: 1.0,
                steps: 201,
            },
            mode: Mode::Closed,
            output: None,
            format: Format::Csv,
            scan_tolerance: 1e-9,
            emit_plot: false,
            squared: false,
            jobs: None,
            crosscheck_tolerance: 1e-6,
        }
    }
}

/// Parses `"4,8,10..12"` into `[4, 8, 10, 11, 12]`.
pub fn parse_n_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {item:?}"))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {item:?}"))?;
            if lo > hi {
                return Err(format!("empty range {item:?}"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().map_err(|_| format!("bad integer {item:?}"))?);
        }
    }
    Ok(out)
}

fn parse_bool(s: &str) -> std::result::Result<bool, String> {
    match s {
        "true" | "yes" | "1" | "on" => Ok(true),
        "false" | "no" | "0" | "off" => Ok(false),
        _ => Err(format!("expected a boolean, got {s:?}")),
    }
}

fn parse_positive(s: &str, what: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("{what} must be a positive number, got {s:?}")),
    }
}

impl SweepConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::default();
        cfg.apply_text(&text, &path.display().to_string())?;
        Ok(cfg)
    }

    /// Applies `key = value` lines; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str, source: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let location = format!("{source}:{}", idx + 1);
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::config(
                    location,
                    format!("expected key = value, got {line:?}"),
                ));
            };
            self.set(key.trim(), value.trim(), &location)?;
        }
        Ok(())
    }

    /// Sets one field by its config-file key.
    pub fn set(&mut self, key: &str, value: &str, location: &str) -> Result<()> {
        let fail = |msg: String| Error::config(location, format!("{key}: {msg}"));
        match key {
            "N" => self.n_list = parse_n_list(value).map_err(fail)?,
            "k" => {
                self.k = if value == "all" {
                    let max = match &self.k {
                        KSelection::All { max } => *max,
                        KSelection::List(_) => None,
                    };
                    KSelection::All { max }
                } else {
                    KSelection::List(parse_n_list(value).map_err(fail)?)
                }
            }
            "k_max" => {
                let m = if value == "none" {
                    None
                } else {
                    Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| fail(format!("bad integer {value:?}")))?,
                    )
                };
                if let KSelection::All { max } = &mut self.k {
                    *max = m;
                } else {
                    return Err(fail("k_max only applies with k = all".into()));
                }
            }
            "a_grid" => self.a_grid = value.parse().map_err(fail)?,
            "mode" => self.mode = value.parse().map_err(fail)?,
            "out" => self.output = Some(PathBuf::from(value)),
            "format" => self.format = value.parse().map_err(fail)?,
            "plot" => self.emit_plot = parse_bool(value).map_err(fail)?,
            "squared" => self.squared = parse_bool(value).map_err(fail)?,
            "scan_tol" => self.scan_tolerance = parse_positive(value, "scan_tol").map_err(fail)?,
            "tolerance" => {
                self.crosscheck_tolerance = parse_positive(value, "tolerance").map_err(fail)?
            }
            "jobs" => {
                let j: usize = value
                    .parse()
                    .map_err(|_| fail(format!("bad integer {value:?}")))?;
                if j == 0 {
                    return Err(fail("jobs must be at least 1".into()));
                }
                self.jobs = Some(j);
            }
            _ => return Err(Error::config(location, format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    /// Every (N, k) pair in sweep order, after checking the whole config.
    pub fn pairs(&self) -> Result<Vec<(usize, usize)>> {
        self.validate()?;
        Ok(self
            .n_list
            .iter()
            .flat_map(|&n| self.k.expand(n).into_iter().map(move |k| (n, k)))
            .collect())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_list.is_empty() {
            return Err(Error::config("N", "list is empty"));
        }
        let n_cap = if matches!(self.mode, Mode::Scan | Mode::Crosscheck) {
            SPIN_MATRIX_N_MAX
        } else {
            DICKE_N_MAX
        };
        for &n in &self.n_list {
            if n < 2 || n > n_cap {
                return Err(Error::config(
                    "N",
                    format!("N = {n} outside 2..={n_cap} for mode {}", self.mode),
                ));
            }
            let ks = self.k.expand(n);
            if ks.is_empty() {
                return Err(Error::config("k", format!("no k values for N = {n}")));
            }
            if let Some(&bad) = ks.iter().find(|&&k| k < 1 || k > n / 2) {
                return Err(Error::config(
                    "k",
                    format!("k = {bad} outside 1..={} for N = {n}", n / 2),
                ));
            }
        }
        let g = self.a_grid;
        if !(0.0 <= g.start && g.start <= g.stop && g.stop <= 1.0) {
            return Err(Error::config(
                "a_grid",
                format!("need 0 <= start <= stop <= 1, got {}:{}", g.start, g.stop),
            ));
        }
        if g.steps < 2 {
            return Err(Error::config(
                "a_grid",
                format!("steps must be >= 2, got {}", g.steps),
            ));
        }
        if !(self.scan_tolerance > 0.0) {
            return Err(Error::config("scan_tol", "must be positive"));
        }
        if self.jobs == Some(0) {
            return Err(Error::config("jobs", "must be at least 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_grids() {
        assert_eq!(parse_n_list("4, 8,10..12").unwrap(), vec![4, 8, 10, 11, 12]);
        assert!(parse_n_list("5..3").is_err());
        let g: AGrid = "0:1:5".parse().unwrap();
        assert_eq!(g.values(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert!("0:1".parse::<AGrid>().is_err());
    }

    #[test]
    fn text_config_and_diagnostics() {
        let mut cfg = SweepConfig::default();
        cfg.apply_text(
            "# fig 3\nN = 20\nk = all\nk_max = 5\nmode = scan\n",
            "fig3.cfg",
        )
        .unwrap();
        assert_eq!(cfg.n_list, vec![20]);
        assert_eq!(cfg.pairs().unwrap().len(), 5);
        assert_eq!(cfg.mode, Mode::Scan);

        let err = cfg
            .apply_text("N = 4\nmode = fast\n", "bad.cfg")
            .unwrap_err();
        assert!(err.to_string().contains("bad.cfg:2"), "{err}");
        let err = cfg.apply_text("nonsense\n", "bad.cfg").unwrap_err();
        assert!(err.to_string().contains("bad.cfg:1"));
    }

    #[test]
    fn validation() {
        let mut cfg = SweepConfig {
            n_list: vec![4],
            k: KSelection::List(vec![3]),
            ..SweepConfig::default()
        };
        assert!(cfg.validate().is_err());
        cfg.k = KSelection::List(vec![2]);
        assert!(cfg.validate().is_ok());
        cfg.a_grid = AGrid {
            start: 0.5,
            stop: 0.2,
            steps: 3,
        };
        assert!(cfg.validate().is_err());
        cfg.a_grid = AGrid {
            start: 0.0,
            stop: 1.0,
            steps: 1,
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn k_all_expansion() {
        assert_eq!(KSelection::All { max: None }.expand(9), vec![1, 2, 3, 4]);
        assert_eq!(
            KSelection::All { max: Some(5) }.expand(100),
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(KSelection::All { max: Some(5) }.expand(4), vec![1, 2]);
    }
}
