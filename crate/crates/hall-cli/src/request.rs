//! Typed, validated requests. Every argument is parsed and range-checked
//! here, before any computation starts.

use std::path::PathBuf;

use fracton_thermo::{ClassParam, Fugacity, DEFAULT_INDEX_TOL};
use spectrum_core::Ratio;

use crate::cli::{Cli, Commands, TableKind};
use crate::error::CliError;
use crate::output::Format;

pub const DEFAULT_COUNT: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandRequest {
    pub command: Command,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Classify {
        fillings: Vec<Ratio>,
        count: usize,
    },
    ClassMembers {
        h: Ratio,
        count: usize,
    },
    Dual {
        fillings: Vec<Ratio>,
    },
    Farey {
        order: u64,
    },
    ValidateChain(ChainSource),
    TheoremCheck {
        order: u64,
    },
    Occupation {
        h: ClassParam,
        fugacities: Vec<Fugacity>,
    },
    Entropy {
        h: ClassParam,
        occupations: Vec<f64>,
    },
    FreeEnergy {
        h: ClassParam,
        fugacities: Vec<Fugacity>,
        kt: f64,
    },
    FractalIndex {
        classes: Vec<ClassParam>,
        tol: f64,
    },
    CentralCharge {
        nus: Vec<u32>,
        tol: f64,
    },
    Table {
        kind: TableKind,
        h: Option<ClassParam>,
        grid: Grid,
        tol: f64,
    },
    ValidateFixtures {
        files: Vec<PathBuf>,
        verbose: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum ChainSource {
    Inline(Vec<Ratio>),
    Fixture(PathBuf),
}

/// `n` points from `lo` to `hi` inclusive, linear or geometric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub log: bool,
}

impl Grid {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = |why: &str| {
            CliError::Usage(format!(
                "invalid grid `{text}`: {why} (expected lo:hi:n[:log])"
            ))
        };
        let parts: Vec<&str> = text.split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad("wrong number of parts"));
        }
        let lo = parse_real(parts[0]).map_err(|_| bad("bad lower bound"))?;
        let hi = parse_real(parts[1]).map_err(|_| bad("bad upper bound"))?;
        let points: usize = parts[2].parse().map_err(|_| bad("bad point count"))?;
        let log = match parts.get(3) {
            None | Some(&"lin") => false,
            Some(&"log") => true,
            Some(_) => return Err(bad("spacing must be `log` or `lin`")),
        };
        if points < 2 {
            return Err(bad("need at least 2 points"));
        }
        if lo >= hi {
            return Err(bad("lower bound must be below upper bound"));
        }
        if log && lo <= 0.0 {
            return Err(bad("log spacing needs a positive lower bound"));
        }
        Ok(Self {
            lo,
            hi,
            points,
            log,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|k| {
                let t = k as f64 / last;
                if k == 0 {
                    self.lo
                } else if k == self.points - 1 {
                    self.hi
                } else if self.log {
                    (self.lo.ln() + t * (self.hi.ln() - self.lo.ln())).exp()
                } else {
                    self.lo + t * (self.hi - self.lo)
                }
            })
            .collect()
    }
}

/// Decimal literal or `p/q`.
pub fn parse_real(text: &str) -> Result<f64, CliError> {
    let value = if text.contains('/') {
        text.parse::<Ratio>()?.to_f64()
    } else {
        text.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("malformed number `{text}`")))?
    };
    if !value.is_finite() {
        return Err(CliError::Usage(format!("number `{text}` is not finite")));
    }
    Ok(value)
}

fn parse_ratio(text: &str) -> Result<Ratio, CliError> {
    Ok(text.parse::<Ratio>()?)
}

fn parse_class(text: &str) -> Result<ClassParam, CliError> {
    Ok(ClassParam::new(parse_real(text)?)?)
}

fn parse_fugacity(h: ClassParam, text: &str) -> Result<Fugacity, CliError> {
    let xi = Fugacity::new(parse_real(text)?)?;
    if h.is_boson() && xi.value() <= 1.0 {
        return Err(CliError::Usage(format!(
            "the boson class needs xi > 1, got {text}"
        )));
    }
    Ok(xi)
}

fn check_occupation(h: ClassParam, n: f64) -> Result<f64, CliError> {
    if n > 0.0 && n < h.max_occupation() {
        Ok(n)
    } else {
        Err(CliError::Usage(format!(
            "occupation {n} outside the physical range (0, {}) of class h = {}",
            h.max_occupation(),
            h.value()
        )))
    }
}

fn all<T>(items: &[String], f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    items.iter().map(|s| f(s)).collect()
}

impl TryFrom<Cli> for CommandRequest {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let count = cli.count.unwrap_or(DEFAULT_COUNT);
        if count == 0 {
            return Err(CliError::Usage("--count must be at least 1".into()));
        }
        let tol = cli.tol.unwrap_or(DEFAULT_INDEX_TOL);
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "--tol must be positive, got {tol}"
            )));
        }
        let command = match cli.command {
            Commands::Classify { nu } => Command::Classify {
                fillings: all(&nu, parse_ratio)?,
                count,
            },
            Commands::ClassMembers { h } => Command::ClassMembers {
                h: parse_ratio(&h)?,
                count,
            },
            Commands::Dual { nu } => Command::Dual {
                fillings: all(&nu, parse_ratio)?,
            },
            Commands::Farey { n } => {
                if n == 0 {
                    return Err(CliError::Usage("Farey order must be at least 1".into()));
                }
                Command::Farey { order: n }
            }
            Commands::ValidateChain { nu, fixtures } => match fixtures {
                Some(path) => Command::ValidateChain(ChainSource::Fixture(path)),
                None if nu.len() < 2 => {
                    return Err(CliError::Usage(
                        "validate-chain needs at least two filling factors or --fixtures".into(),
                    ))
                }
                None => Command::ValidateChain(ChainSource::Inline(all(&nu, parse_ratio)?)),
            },
            Commands::TheoremCheck { n } => {
                if n == 0 {
                    return Err(CliError::Usage("Farey order must be at least 1".into()));
                }
                Command::TheoremCheck { order: n }
            }
            Commands::Occupation { h, xi } => {
                let h = parse_class(&h)?;
                Command::Occupation {
                    h,
                    fugacities: all(&xi, |s| parse_fugacity(h, s))?,
                }
            }
            Commands::Entropy { h, n } => {
                let h = parse_class(&h)?;
                Command::Entropy {
                    h,
                    occupations: all(&n, |s| check_occupation(h, parse_real(s)?))?,
                }
            }
            Commands::FreeEnergy { h, xi, kt } => {
                let h = parse_class(&h)?;
                let kt = parse_real(&kt)?;
                if kt <= 0.0 {
                    return Err(CliError::Usage(format!("--kt must be positive, got {kt}")));
                }
                Command::FreeEnergy {
                    h,
                    fugacities: all(&xi, |s| parse_fugacity(h, s))?,
                    kt,
                }
            }
            Commands::FractalIndex { h } => Command::FractalIndex {
                classes: all(&h, parse_class)?,
                tol,
            },
            Commands::CentralCharge { nu } => {
                if nu.contains(&0) {
                    return Err(CliError::Usage("central-charge needs nu >= 1".into()));
                }
                let nus = if nu.is_empty() { (1..=6).collect() } else { nu };
                Command::CentralCharge { nus, tol }
            }
            Commands::Table { kind, h, grid } => table_request(kind, h, grid, tol)?,
            Commands::ValidateFixtures { fixtures, verbose } => Command::ValidateFixtures {
                files: fixtures,
                verbose,
            },
        };
        Ok(CommandRequest {
            command,
            format: cli.format,
        })
    }
}

fn table_request(
    kind: TableKind,
    h: Option<String>,
    grid: Option<String>,
    tol: f64,
) -> Result<Command, CliError> {
    let default_grid = match kind {
        TableKind::Occupation => "0.01:100:9:log",
        TableKind::Entropy => "0.05:0.95:19",
        TableKind::Index => "1:2:5",
    };
    let grid = Grid::parse(grid.as_deref().unwrap_or(default_grid))?;
    let h = match (kind, h) {
        (TableKind::Index, Some(_)) => {
            return Err(CliError::Usage(
                "the index table sweeps h over the grid; drop the class argument".into(),
            ))
        }
        (TableKind::Index, None) => {
            if grid.lo < 1.0 || grid.hi > 2.0 {
                return Err(CliError::Usage("index grid must lie within [1, 2]".into()));
            }
            None
        }
        (_, None) => return Err(CliError::Usage("this table needs a class h".into())),
        (_, Some(text)) => Some(parse_class(&text)?),
    };
    if let Some(h) = h {
        match kind {
            TableKind::Occupation if grid.lo <= 0.0 => {
                return Err(CliError::Usage("fugacity grid must be positive".into()))
            }
            TableKind::Occupation if h.is_boson() && grid.lo <= 1.0 => {
                return Err(CliError::Usage(
                    "the boson class needs a fugacity grid above 1".into(),
                ))
            }
            TableKind::Entropy => {
                check_occupation(h, grid.lo)?;
                check_occupation(h, grid.hi)?;
            }
            _ => {}
        }
    }
    Ok(Command::Table { kind, h, grid, tol })
}
