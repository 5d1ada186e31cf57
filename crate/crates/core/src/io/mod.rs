//! File formats and human-readable rendering.
//!
//! Series, operators, fusion tables and PBW vectors all serialize through `serde`; this
//! module adds file loading, the optional TOML configuration and the pretty printer.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{PuiseuxSeries, Rat};
use crate::error::{MathError, Result};
use crate::mlde::MldeOp;
use crate::uea::{parse_vector, ModuleVector};

/// Defaults read from a TOML file such as
///
/// ```toml
/// trunc = 30
/// eps_degree = 8
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub trunc: Option<i64>,
    pub eps_degree: Option<usize>,
}

impl Config {
    pub fn from_toml(s: &str) -> Result<Config> {
        toml::from_str(s).map_err(|e| MathError::Parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Config> {
        Config::from_toml(&read_text(path)?)
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| MathError::Parse(format!("{}: {e}", path.display())))
}

pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| MathError::Parse(format!("json: {e}")))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    from_json(&read_text(path)?).map_err(|e| MathError::Parse(format!("{}: {e}", path.display())))
}

pub fn read_operator(path: &Path) -> Result<MldeOp> {
    let op: MldeOp = read_json(path)?;
    op.check_weights()?;
    Ok(op)
}

/// A single series or a JSON array of series.
pub fn read_series(path: &Path) -> Result<Vec<PuiseuxSeries>> {
    let text = read_text(path)?;
    let value: serde_json::Value = from_json(&text)?;
    let parsed = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|s| vec![s])
    };
    parsed.map_err(|e| MathError::Parse(format!("{}: {e}", path.display())))
}

pub fn read_vector(path: &Path) -> Result<ModuleVector> {
    parse_vector(&read_text(path)?)
}

fn q_power(e: &Rat) -> String {
    if e.is_one() {
        "q".into()
    } else if e.is_integer() {
        format!("q^{e}")
    } else {
        format!("q^{{{e}}}")
    }
}

/// `q^{1/6}(1 + 4q + 10q^2 + …)`; the ellipsis marks a truncated series.
pub fn pretty_series(s: &PuiseuxSeries) -> String {
    let Some(v) = s.valuation() else {
        return match s.trunc() {
            Some(t) => format!("O({})", q_power(t)),
            None => "0".into(),
        };
    };
    let mut body = String::new();
    for (e, c) in s.terms() {
        let rel = &e - &v;
        let (neg, mag) = match c.to_rational() {
            Some(r) if r.is_negative() => (true, (-&r).to_string()),
            Some(r) => (false, r.to_string()),
            None => (false, format!("({c})")),
        };
        if body.is_empty() {
            if neg {
                body.push('-');
            }
        } else {
            body.push_str(if neg { " - " } else { " + " });
        }
        match (rel.is_zero(), mag == "1") {
            (true, _) => body.push_str(&mag),
            (false, true) => body.push_str(&q_power(&rel)),
            (false, false) => body.push_str(&format!("{mag}{}", q_power(&rel))),
        }
    }
    if s.trunc().is_some() {
        body.push_str(" + …");
    }
    if v.is_zero() {
        format!("({body})")
    } else {
        format!("{}({body})", q_power(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn pretty_printing() {
        let s = PuiseuxSeries::from_rational_terms(
            [(rat(1, 6), Rat::int(1)), (rat(7, 6), Rat::int(4)), (rat(13, 6), Rat::int(-10))],
            Some(rat(19, 6)),
        );
        assert_eq!(pretty_series(&s), "q^{1/6}(1 + 4q - 10q^2 + …)");
        assert_eq!(pretty_series(&PuiseuxSeries::zero()), "0");
    }

    #[test]
    fn config_parses() {
        let c = Config::from_toml("trunc = 30\neps_degree = 8\n").unwrap();
        assert_eq!(c, Config { trunc: Some(30), eps_degree: Some(8) });
        assert!(Config::from_toml("cyclotomic = 5").is_err());
    }
}
