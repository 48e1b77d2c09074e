//! Runtime caps for brute-force work, with environment overrides.

use std::env;

use crate::error::{Error, Result};
use crate::params::CurveFamily;

pub const ENV_MAX_ELEMENTS: &str = "SKABELUND_MAX_ELEMENTS";
pub const ENV_MAX_SUBGROUP_M: &str = "SKABELUND_MAX_SUBGROUP_M";
pub const ENV_SAMPLES: &str = "SKABELUND_SAMPLES";
pub const ENV_MAX_S_SUZUKI: &str = "SKABELUND_MAX_S_SUZUKI";
pub const ENV_MAX_S_REE: &str = "SKABELUND_MAX_S_REE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest subgroup whose elements are enumerated one by one.
    pub max_elements: u64,
    /// Largest `m` for closure enumeration of all subgroups of `C_m x C_m`.
    pub max_subgroup_m: i128,
    /// Number of deterministic samples once a family is too large to check exhaustively.
    pub samples: usize,
    pub max_s_suzuki: u32,
    pub max_s_ree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: 100_000,
            max_subgroup_m: 60,
            samples: 64,
            max_s_suzuki: 6,
            max_s_ree: 5,
        }
    }
}

fn read_var<T: std::str::FromStr>(name: &'static str) -> Result<Option<T>> {
    match env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse { what: name, input: raw }),
        Err(_) => Ok(None),
    }
}

impl Caps {
    /// Defaults, overridden by any `SKABELUND_*` variables that are set.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Some(v) = read_var(ENV_MAX_ELEMENTS)? {
            caps.max_elements = v;
        }
        if let Some(v) = read_var(ENV_MAX_SUBGROUP_M)? {
            caps.max_subgroup_m = v;
        }
        if let Some(v) = read_var(ENV_SAMPLES)? {
            caps.samples = v;
        }
        if let Some(v) = read_var(ENV_MAX_S_SUZUKI)? {
            caps.max_s_suzuki = v;
        }
        if let Some(v) = read_var(ENV_MAX_S_REE)? {
            caps.max_s_ree = v;
        }
        Ok(caps)
    }

    pub fn max_s(&self, family: CurveFamily) -> u32 {
        match family {
            CurveFamily::Suzuki => self.max_s_suzuki,
            CurveFamily::Ree => self.max_s_ree,
        }
    }

    pub fn check_s(&self, family: CurveFamily, s: u32) -> Result<()> {
        if s < 1 {
            return Err(Error::InvalidS(s));
        }
        let cap = self.max_s(family);
        if s > cap {
            return Err(Error::CapExceeded {
                what: "s",
                value: s as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_caps() {
        let caps = Caps::default();
        assert!(caps.check_s(CurveFamily::Suzuki, 6).is_ok());
        assert!(matches!(
            caps.check_s(CurveFamily::Suzuki, 7),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            caps.check_s(CurveFamily::Ree, 6),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(caps.check_s(CurveFamily::Ree, 0), Err(Error::InvalidS(0)));
    }
}
