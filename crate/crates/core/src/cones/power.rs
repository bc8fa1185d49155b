use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::SymMatrix;
use crate::error::{domain, param, Error, Result};

/// The three entrywise power maps. Every family sends 0 to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerFamily {
    /// `x ↦ x^α` on `x >= 0`.
    Plain,
    /// `x ↦ sgn(x) |x|^α`.
    Odd,
    /// `x ↦ |x|^α`.
    Even,
}

impl PowerFamily {
    pub const ALL: [PowerFamily; 3] = [PowerFamily::Plain, PowerFamily::Odd, PowerFamily::Even];

    /// Scalar map. `Plain` at a negative argument is NaN.
    #[inline]
    pub fn apply(self, x: f64, alpha: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        match self {
            PowerFamily::Plain => {
                if x < 0.0 {
                    f64::NAN
                } else {
                    x.powf(alpha)
                }
            }
            PowerFamily::Odd => x.signum() * x.abs().powf(alpha),
            PowerFamily::Even => x.abs().powf(alpha),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PowerFamily::Plain => "plain",
            PowerFamily::Odd => "odd",
            PowerFamily::Even => "even",
        }
    }
}

impl fmt::Display for PowerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PowerFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(PowerFamily::Plain),
            "odd" | "psi" => Ok(PowerFamily::Odd),
            "even" | "phi" => Ok(PowerFamily::Even),
            other => param(format!("unknown power family `{other}` (plain|odd|even)")),
        }
    }
}

/// `f[m] = (f(m_ij))` for the chosen family.
pub fn entrywise_power(m: &SymMatrix, alpha: f64, family: PowerFamily) -> Result<SymMatrix> {
    if !alpha.is_finite() {
        return param(format!("power must be finite, got {alpha}"));
    }
    if family == PowerFamily::Plain && m.min_entry() < 0.0 {
        return domain("plain powers need an entrywise nonnegative matrix");
    }
    m.map(|x| family.apply(x, alpha))
}
