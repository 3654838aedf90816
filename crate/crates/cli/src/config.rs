//! Job configuration: flag values merged over an optional key-value config
//! file. Flags win on conflict.

use std::collections::HashMap;
use std::path::Path;

use wild_mckay::{MetacyclicGroup, Representation};

/// A malformed-input failure, reported on stderr with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Raw key-value pairs from a `key = value` config file. `#` starts a
/// comment; the `rep` value lists `d:s` pairs separated by spaces or
/// commas.
pub fn load_config(path: &Path) -> Result<HashMap<String, String>, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let mut out = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            usage(format!(
                "config line {} is not `key = value`: {raw:?}",
                lineno + 1
            ))
        })?;
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

/// Parses one `d:s` summand.
pub fn parse_summand(text: &str) -> Result<(u64, u64), UsageError> {
    let (d, s) = text
        .split_once(':')
        .ok_or_else(|| usage(format!("summand {text:?} is not of the form d:s")))?;
    let d = d
        .trim()
        .parse::<u64>()
        .map_err(|_| usage(format!("summand dimension {d:?} is not an integer")))?;
    let s = s
        .trim()
        .parse::<u64>()
        .map_err(|_| usage(format!("summand exponent {s:?} is not an integer")))?;
    Ok((d, s))
}

/// Fully resolved job parameters.
pub struct JobConfig {
    pub p: u64,
    pub m: u64,
    pub a: u64,
    pub rep: Option<Vec<(u64, u64)>>,
    pub gamma: Option<u64>,
    pub r: Option<u64>,
    pub q: Option<u64>,
    pub bound: Option<u64>,
    pub window_multiplier: u64,
}

pub struct RawInputs {
    pub p: Option<u64>,
    pub m: Option<u64>,
    pub a: Option<u64>,
    pub rep: Vec<String>,
    pub gamma: Option<u64>,
    pub r: Option<u64>,
    pub q: Option<u64>,
    pub bound: Option<u64>,
    pub window_multiplier: Option<u64>,
    pub config: Option<std::path::PathBuf>,
}

impl JobConfig {
    /// Merges flags over the config file and the environment. Precedence:
    /// flag, then config key, then `WILD_MCKAY_WINDOW_MULT` for the window
    /// multiplier, then defaults.
    pub fn resolve(raw: RawInputs) -> Result<Self, UsageError> {
        let file = match &raw.config {
            Some(path) => load_config(path)?,
            None => HashMap::new(),
        };
        let int_key = |name: &str| -> Result<Option<u64>, UsageError> {
            match file.get(name) {
                None => Ok(None),
                Some(v) => v
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| usage(format!("config key {name} = {v:?} is not an integer"))),
            }
        };
        let p = raw
            .p
            .or(int_key("p")?)
            .ok_or_else(|| usage("missing required value: p"))?;
        let m = raw
            .m
            .or(int_key("m")?)
            .ok_or_else(|| usage("missing required value: m"))?;
        let a = raw
            .a
            .or(int_key("a")?)
            .ok_or_else(|| usage("missing required value: a"))?;

        let rep = if !raw.rep.is_empty() {
            Some(
                raw.rep
                    .iter()
                    .map(|s| parse_summand(s))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        } else if let Some(text) = file.get("rep") {
            Some(
                text.split([' ', ','])
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_summand)
                    .collect::<Result<Vec<_>, _>>()?,
            )
        } else {
            None
        };

        let env_mult = std::env::var("WILD_MCKAY_WINDOW_MULT")
            .ok()
            .map(|v| {
                v.parse::<u64>()
                    .map_err(|_| usage(format!("WILD_MCKAY_WINDOW_MULT = {v:?} is not an integer")))
            })
            .transpose()?;
        let window_multiplier = raw
            .window_multiplier
            .or(int_key("window_multiplier")?)
            .or(env_mult)
            .unwrap_or(1)
            .max(1);

        Ok(Self {
            p,
            m,
            a,
            rep,
            gamma: raw.gamma.or(int_key("gamma")?),
            r: raw.r.or(int_key("r")?),
            q: raw.q.or(int_key("q")?),
            bound: raw.bound.or(int_key("bound")?),
            window_multiplier,
        })
    }

    pub fn group(&self) -> Result<MetacyclicGroup, wild_mckay::Error> {
        MetacyclicGroup::new(self.p, self.m, self.a)
    }

    pub fn representation(
        &self,
        group: &MetacyclicGroup,
    ) -> Result<Result<Representation, wild_mckay::Error>, UsageError> {
        match &self.rep {
            Some(pairs) => Ok(Representation::from_pairs(group, pairs)),
            None => Err(usage("this command needs a representation: pass --rep d:s (repeatable) or a config `rep` key")),
        }
    }

    pub fn require(&self, name: &str, value: Option<u64>) -> Result<u64, UsageError> {
        value.ok_or_else(|| usage(format!("missing required value: {name}")))
    }
}
