//! Inclusive integer ranges for parameter grids: `7` or `4:12`.

use anyhow::{bail, Result};

#[derive(Debug, Clone, Copy)]
pub struct Range {
    pub lo: u64,
    pub hi: u64,
}

impl Range {
    pub fn values(&self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for Range {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (a.parse()?, b.parse()?),
            None => {
                let v = s.parse()?;
                (v, v)
            }
        };
        if lo > hi {
            bail!("empty range {s}");
        }
        Ok(Range { lo, hi })
    }
}
