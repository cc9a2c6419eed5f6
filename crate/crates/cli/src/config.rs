use std::path::PathBuf;

use hkr_core::commuting::DEFAULT_TUPLE_WORK_CAP;
use hkr_core::group::DEFAULT_ORDER_CAP;

use crate::args::{Format, GlobalArgs};
use crate::error::CliError;

/// Truncation degree used when `--D` is not given.
pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    pub order_cap: usize,
    pub tuple_work_cap: u64,
    pub truncation_default: usize,
    /// `None` disables caching.
    pub cache_path: Option<PathBuf>,
    pub output_format: Format,
    pub verbose: bool,
}

fn default_cache_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os("HKR_CACHE").filter(|p| !p.is_empty()) {
        return Some(PathBuf::from(p));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|p| !p.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("hkr").join("cache.json"))
}

impl Config {
    pub fn from_args(g: &GlobalArgs) -> Result<Self, CliError> {
        let order_cap = g.order_cap.unwrap_or(DEFAULT_ORDER_CAP);
        let tuple_work_cap = g.tuple_work_cap.unwrap_or(DEFAULT_TUPLE_WORK_CAP);
        if order_cap == 0 || tuple_work_cap == 0 {
            return Err(CliError::Usage("caps must be positive".into()));
        }
        let cache_path = if g.no_cache {
            None
        } else {
            g.cache.clone().or_else(default_cache_path)
        };
        Ok(Self {
            order_cap,
            tuple_work_cap,
            truncation_default: DEFAULT_TRUNCATION,
            cache_path,
            output_format: g.format,
            verbose: g.verbose,
        })
    }
}
