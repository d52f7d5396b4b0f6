use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratsq_core::Natural;

#[derive(Debug, Parser)]
#[command(
    name = "ratsq",
    version,
    about = "Exact rational squares in the intervals (a, a+1)"
)]
pub struct Cli {
    /// Worker threads for sweeps, heatmaps and figures [default: available cores]
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub jobs: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Least denominator s >= 2 of a rational square in (a, a+1)
    Sigma {
        #[arg(value_parser = positive)]
        a: Natural,
        #[arg(long, value_enum, default_value_t = StrategyArg::Scan)]
        strategy: StrategyArg,
    },
    /// Number of t with s^2 a < t^2 < s^2 (a+1)
    Tau {
        #[arg(value_parser = positive)]
        a: Natural,
        #[arg(value_parser = positive)]
        s: Natural,
    },
    /// The witnesses t counted by `tau`, ascending
    Tset {
        #[arg(value_parser = positive)]
        a: Natural,
        #[arg(value_parser = positive)]
        s: Natural,
    },
    /// First rational square in (a, a+1) by denominator, then numerator
    FirstSquare {
        #[arg(value_parser = positive)]
        a: Natural,
    },
    /// Continued fraction of sqrt(d), period in parentheses
    Cf {
        #[arg(value_parser = positive)]
        d: Natural,
    },
    /// One record per a in [from, to]
    Sweep {
        #[arg(long, value_parser = positive)]
        from: Natural,
        #[arg(long, value_parser = positive)]
        to: Natural,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grid over (a, s) shaded by tau, or colored by the step tau_s - tau_(s-1)
    Heatmap {
        /// [default: 8 for tau, 1 for delta]
        #[arg(long)]
        a_min: Option<u64>,
        #[arg(long, default_value_t = 256)]
        a_max: u64,
        #[arg(long, default_value_t = 2)]
        s_min: u64,
        #[arg(long, default_value_t = 100)]
        s_max: u64,
        #[arg(long, value_enum, default_value_t = HeatMode::Tau)]
        mode: HeatMode,
        #[arg(long, value_enum, default_value_t = HeatFormat::Svg)]
        format: HeatFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write fig1..fig6 as SVG with CSV companions
    Figures {
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// JSON reports on the observed structure of sigma and tau
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub report: Report,
}

#[derive(Debug, Subcommand)]
pub enum Report {
    /// How often sigma(n^2+n-d) = sigma(n^2+n+d)
    Symmetry {
        /// Largest n^2+n included
        #[arg(long, default_value_t = 2000)]
        a_max: u64,
        /// Let d run over 1..n^2+n instead of 1..=n
        #[arg(long)]
        full_range: bool,
    },
    /// Values of k with sigma(a) = sigma_k(a) for n^2 < a < (n+1)^2
    Kset {
        #[arg(long, default_value_t = 100)]
        n: u64,
        /// Reference set to compare against, e.g. "1-15,18,19"
        #[arg(long, value_parser = parse_k_list)]
        expect: Option<Vec<u64>>,
    },
    /// Peaks and minima of the off-bound points per interval
    Offbound {
        #[arg(long, default_value_t = 11)]
        n_from: u64,
        #[arg(long, default_value_t = 20)]
        n_to: u64,
        #[arg(long, default_value_t = 7)]
        minima_from: u64,
        #[arg(long, default_value_t = 30)]
        minima_to: u64,
    },
    /// Search for s with tau_s(a) = k and tau_(s+1)(a) = k - 1
    Conjecture1 {
        #[arg(long, default_value_t = 300)]
        a_max: u64,
        #[arg(long, default_value_t = 4)]
        k_max: u64,
        #[arg(long, default_value_t = 20_000)]
        s_max: u64,
    },
    /// Where the set of s with tau_s(a) > 0 fails to be upward closed
    Closure {
        #[arg(long, value_parser = positive)]
        a: Natural,
        #[arg(long, value_parser = positive)]
        s_max: Natural,
        #[arg(long, default_value_t = 9)]
        odd_k_max: u64,
        #[arg(long, default_value_t = 200)]
        n_bound: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Scan,
    Cf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HeatMode {
    Tau,
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HeatFormat {
    Svg,
    Csv,
}

fn positive(s: &str) -> Result<Natural, String> {
    let v: Natural = s
        .parse()
        .map_err(|_| format!("not a non-negative integer: {s:?}"))?;
    if v.is_zero() {
        return Err("must be at least 1".into());
    }
    Ok(v)
}

/// `"1-3,7"` → `[1, 2, 3, 7]`, sorted and deduplicated.
pub fn parse_k_list(s: &str) -> Result<Vec<u64>, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad entry {part:?}"))
        };
        match part.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi || hi - lo > 1_000_000 {
                    return Err(format!("bad range {part:?}"));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn k_lists() {
        assert_eq!(parse_k_list("1-3, 7,2").unwrap(), vec![1, 2, 3, 7]);
        assert!(parse_k_list("3-1").is_err());
        assert!(parse_k_list("").is_err());
        assert!(parse_k_list("1,x").is_err());
    }

    #[test]
    fn zero_is_rejected() {
        assert!(Cli::try_parse_from(["ratsq", "sigma", "0"]).is_err());
        assert!(Cli::try_parse_from(["ratsq", "sigma", "-3"]).is_err());
        assert!(Cli::try_parse_from(["ratsq", "tau", "8", "0"]).is_err());
        assert!(Cli::try_parse_from(["ratsq", "--jobs", "0", "sigma", "8"]).is_err());
        assert!(Cli::try_parse_from(["ratsq", "sigma", "8", "--jobs", "2"]).is_ok());
    }
}
