//! Argument parsing and output formatting for the `satsemi` binary.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use satsemi::oracle::{check_all, Report};
use satsemi::sat_tree::{enumerate_sat_genus_with_jobs, enumerate_sat_with_jobs};
use satsemi::rank_enum::enumerate_rank_with_jobs;
use satsemi::{
    closure, feasible_rank, maximal_elements, min_genus, minimal_system, GeneratorSet,
    NumericalSemigroup, SatTree,
};

#[derive(Debug, Parser)]
#[command(name = "satsemi", version, about = "Saturated numerical semigroups with a fixed Frobenius number")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the enumeration commands.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Output order. Only canonical order exists.
    #[arg(long, global = true, value_enum, default_value_t = SortOrder::Canonical)]
    pub sort: SortOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SortOrder {
    Canonical,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every saturated semigroup with Frobenius number F.
    Enumerate {
        #[arg(long)]
        frobenius: usize,
        /// Print each tree layer as soon as it is computed, without the count footer.
        #[arg(long)]
        stream: bool,
    },
    /// Saturated semigroups with Frobenius number F and genus g.
    Genus {
        #[arg(long)]
        frobenius: usize,
        #[arg(long)]
        genus: usize,
    },
    /// Inclusion-maximal saturated semigroups with Frobenius number F.
    Maximal {
        #[arg(long)]
        frobenius: usize,
    },
    /// Smallest genus of a saturated semigroup with Frobenius number F.
    MinGenus {
        #[arg(long)]
        frobenius: usize,
    },
    /// Smallest saturated semigroup with Frobenius number F containing a set.
    Closure {
        #[arg(long)]
        frobenius: usize,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// Minimal system of generators and rank of a saturated semigroup.
    MinGens {
        #[arg(long)]
        frobenius: usize,
        /// Nonzero members below the Frobenius number.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        small: Vec<usize>,
    },
    /// Saturated semigroups with Frobenius number F and rank p.
    Rank {
        #[arg(long)]
        frobenius: usize,
        #[arg(long)]
        rank: usize,
    },
    /// Whether some saturated semigroup with Frobenius number F has rank p.
    Feasible {
        #[arg(long)]
        frobenius: usize,
        #[arg(long)]
        rank: usize,
    },
    /// Cross-check the fast algorithms against brute force for F = 1..=N.
    Verify {
        #[arg(long)]
        max_frobenius: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] satsemi::Error),
    #[error("verification failed for F = {0:?}")]
    VerifyFailed(Vec<usize>),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// One semigroup as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub frobenius: usize,
    pub small_elements: Vec<usize>,
    pub gaps: Vec<usize>,
    pub msg: Vec<usize>,
    pub sat_msg: Vec<usize>,
    pub genus: usize,
    pub multiplicity: usize,
    pub embedding_dimension: usize,
    pub rank: usize,
}

impl OutputRecord {
    pub fn new(s: &NumericalSemigroup) -> Result<Self, satsemi::Error> {
        let msg = s.minimal_generators();
        let sat_msg = minimal_system(s.frobenius(), s)?;
        Ok(OutputRecord {
            frobenius: s.frobenius(),
            small_elements: s.small_elements(),
            gaps: s.gaps(),
            embedding_dimension: msg.len(),
            msg: msg.into_vec(),
            rank: sat_msg.len(),
            sat_msg: sat_msg.elements().to_vec(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
        })
    }

    pub fn to_semigroup(&self) -> Result<NumericalSemigroup, satsemi::Error> {
        NumericalSemigroup::from_small_elements(self.frobenius, self.small_elements.iter().copied())
    }

    /// `0,a,b,…,F+1→ | msg=⟨…⟩ | g=… | rank=…`
    pub fn text_line(&self, color: bool) -> String {
        let mut members = vec!["0".to_string()];
        members.extend(self.small_elements.iter().map(usize::to_string));
        members.push((self.frobenius + 1).to_string());
        let set = format!("{}→", members.join(","));
        let set = if color { format!("\x1b[1m{set}\x1b[0m") } else { set };
        let msg = GeneratorSet::new(self.msg.clone());
        format!("{set} | msg={msg} | g={} | rank={}", self.genus, self.rank)
    }

    fn csv_row(&self) -> [String; 8] {
        [
            self.frobenius.to_string(),
            self.genus.to_string(),
            self.multiplicity.to_string(),
            self.embedding_dimension.to_string(),
            self.rank.to_string(),
            join(&self.small_elements, ";"),
            join(&self.msg, ";"),
            join(&self.sat_msg, ";"),
        ]
    }
}

const CSV_HEADER: [&str; 8] =
    ["frobenius", "genus", "multiplicity", "edim", "rank", "small_elements", "msg", "sat_msg"];

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

/// Reads `SATSEMI_COLOR`; decoration is off unless it is `1`.
pub fn color_from_env() -> bool {
    std::env::var("SATSEMI_COLOR").is_ok_and(|v| v == "1")
}

struct Printer<'a, W: Write> {
    out: &'a mut W,
    format: Format,
    color: bool,
}

impl<W: Write> Printer<'_, W> {
    fn records(&mut self, list: &[NumericalSemigroup], footer: bool) -> Result<(), CliError> {
        let recs = list.iter().map(OutputRecord::new).collect::<Result<Vec<_>, _>>()?;
        match self.format {
            Format::Text => {
                for r in &recs {
                    writeln!(self.out, "{}", r.text_line(self.color))?;
                }
                if footer {
                    writeln!(self.out, "{}", recs.len())?;
                }
            }
            Format::Csv => self.csv(&recs, true)?,
            Format::Json => {
                serde_json::to_writer(&mut *self.out, &recs)?;
                writeln!(self.out)?;
            }
        }
        Ok(())
    }

    fn single(&mut self, s: &NumericalSemigroup) -> Result<(), CliError> {
        let r = OutputRecord::new(s)?;
        match self.format {
            Format::Text => writeln!(self.out, "{}", r.text_line(self.color))?,
            Format::Csv => self.csv(&[r], true)?,
            Format::Json => {
                serde_json::to_writer(&mut *self.out, &r)?;
                writeln!(self.out)?;
            }
        }
        Ok(())
    }

    fn stream(&mut self, layer: &[NumericalSemigroup], first: bool) -> Result<(), CliError> {
        match self.format {
            Format::Text => self.records(layer, false)?,
            Format::Csv => {
                let recs = layer.iter().map(OutputRecord::new).collect::<Result<Vec<_>, _>>()?;
                self.csv(&recs, first)?;
            }
            Format::Json => {
                for s in layer {
                    serde_json::to_writer(&mut *self.out, &OutputRecord::new(s)?)?;
                    writeln!(self.out)?;
                }
            }
        }
        self.out.flush()?;
        Ok(())
    }

    fn csv(&mut self, recs: &[OutputRecord], header: bool) -> Result<(), CliError> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *self.out);
        if header {
            w.write_record(CSV_HEADER)?;
        }
        for r in recs {
            w.write_record(r.csv_row())?;
        }
        w.flush()?;
        Ok(())
    }

    fn scalar(&mut self, name: &str, fields: &[(&str, String)], value: String) -> Result<(), CliError> {
        match self.format {
            Format::Text => writeln!(self.out, "{value}")?,
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *self.out);
                let mut head: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
                head.push(name);
                w.write_record(head)?;
                let mut row: Vec<String> = fields.iter().map(|(_, v)| v.clone()).collect();
                row.push(value);
                w.write_record(row)?;
                w.flush()?;
            }
            Format::Json => {
                // values are bare numbers or booleans
                let body: Vec<String> = fields
                    .iter()
                    .map(|(k, v)| (*k, v.as_str()))
                    .chain([(name, value.as_str())])
                    .map(|(k, v)| format!("\"{k}\":{v}"))
                    .collect();
                writeln!(self.out, "{{{}}}", body.join(","))?;
            }
        }
        Ok(())
    }

    fn reports(&mut self, reports: &[Report]) -> Result<(), CliError> {
        match self.format {
            Format::Text => {
                for r in reports {
                    writeln!(self.out, "{r}")?;
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *self.out);
                w.write_record(["frobenius", "sat_count", "checks", "discrepancies"])?;
                for r in reports {
                    w.write_record([
                        r.frobenius.to_string(),
                        r.sat_count.to_string(),
                        r.checks.to_string(),
                        r.discrepancies.join(";"),
                    ])?;
                }
                w.flush()?;
            }
            Format::Json => {
                serde_json::to_writer(&mut *self.out, reports)?;
                writeln!(self.out)?;
            }
        }
        Ok(())
    }
}

/// Executes `cli`, writing data to `out`.
pub fn run<W: Write>(cli: &Cli, out: &mut W, color: bool) -> Result<(), CliError> {
    let jobs = usize::from(cli.global.jobs);
    let mut p = Printer { out, format: cli.global.format, color };
    match cli.command {
        Command::Enumerate { frobenius, stream: false } => {
            p.records(&enumerate_sat_with_jobs(frobenius, jobs)?, true)?;
        }
        Command::Enumerate { frobenius, stream: true } => {
            for (i, layer) in SatTree::new(frobenius)?.jobs(jobs).layers().enumerate() {
                let layer: Vec<_> = layer.into_iter().map(|n| n.into_semigroup()).collect();
                p.stream(&layer, i == 0)?;
            }
        }
        Command::Genus { frobenius, genus } => {
            p.records(&enumerate_sat_genus_with_jobs(frobenius, genus, jobs)?, true)?;
        }
        Command::Maximal { frobenius } => p.records(&maximal_elements(frobenius)?, true)?,
        Command::MinGenus { frobenius } => {
            let g = min_genus(frobenius)?;
            p.scalar("min_genus", &[("frobenius", frobenius.to_string())], g.to_string())?;
        }
        Command::Closure { frobenius, ref set } => p.single(&closure(frobenius, set)?)?,
        Command::MinGens { frobenius, ref small } => {
            let s = NumericalSemigroup::from_small_elements(frobenius, small.iter().copied())?;
            let sys = minimal_system(frobenius, &s)?;
            match p.format {
                Format::Text => {
                    writeln!(p.out, "sat_msg={} | rank={}", sys.elements(), sys.len())?;
                }
                _ => p.single(&s)?,
            }
        }
        Command::Rank { frobenius, rank } => {
            p.records(&enumerate_rank_with_jobs(frobenius, rank, jobs)?, true)?;
        }
        Command::Feasible { frobenius, rank } => {
            let fields = [("frobenius", frobenius.to_string()), ("rank", rank.to_string())];
            p.scalar("feasible", &fields, feasible_rank(frobenius, rank).to_string())?;
        }
        Command::Verify { max_frobenius } => {
            let reports = (1..=max_frobenius).map(check_all).collect::<Result<Vec<_>, _>>()?;
            p.reports(&reports)?;
            let failed: Vec<usize> =
                reports.iter().filter(|r| !r.passed()).map(|r| r.frobenius).collect();
            if !failed.is_empty() {
                return Err(CliError::VerifyFailed(failed));
            }
        }
    }
    Ok(())
}
