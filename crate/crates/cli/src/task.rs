//! Task blocks: the operation, its named inputs and numeric parameters.

use std::fmt;
use std::str::FromStr;

use crate::error::CliError;
use crate::scenario::{parse_ident, parse_int, parse_window, Block, Scenario};

pub const MAX_LEVEL: usize = 64;
pub const MAX_WINDOW_WIDTH: i64 = 64;
pub const MAX_WINDOW_ABS: i64 = 1000;
pub const MAX_RESOLUTION_LENGTH: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    WprCheck,
    TelescopeLemma,
    Rgamma,
    Llambda,
    Idempotence,
    KernelIdentity,
    TorsionChar,
    Mgm,
    KoszulLimitContrast,
    GmDuality,
    Permanence,
    BaseChange,
    ConeTriangle,
    CompleteChar,
}

const OPS: [(Op, &str); 14] = [
    (Op::WprCheck, "wpr_check"),
    (Op::TelescopeLemma, "telescope_lemma"),
    (Op::Rgamma, "rgamma"),
    (Op::Llambda, "llambda"),
    (Op::Idempotence, "idempotence"),
    (Op::KernelIdentity, "kernel_identity"),
    (Op::TorsionChar, "torsion_char"),
    (Op::Mgm, "mgm"),
    (Op::KoszulLimitContrast, "koszul_limit_contrast"),
    (Op::GmDuality, "gm_duality"),
    (Op::Permanence, "permanence"),
    (Op::BaseChange, "base_change"),
    (Op::ConeTriangle, "cone_triangle"),
    (Op::CompleteChar, "complete_char"),
];

impl FromStr for Op {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        OPS.iter().find(|(_, n)| *n == s).map(|(o, _)| *o).ok_or(())
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(OPS.iter().find(|(o, _)| o == self).expect("every op is named").1)
    }
}

/// Which named inputs and parameters an operation reads.
struct Signature {
    refs: &'static [&'static str],
    window: bool,
    resolution_length: bool,
    min_level: usize,
}

impl Op {
    fn signature(self) -> Signature {
        let s = |refs, window, min_level| Signature {
            refs,
            window,
            resolution_length: false,
            min_level,
        };
        match self {
            Op::WprCheck | Op::TelescopeLemma | Op::KernelIdentity | Op::ConeTriangle => s(&["sequence"], false, 1),
            Op::Rgamma => s(&["module", "sequence"], true, 1),
            Op::Llambda => Signature {
                resolution_length: true,
                ..s(&["module", "sequence"], true, 1)
            },
            Op::Idempotence => s(&["module", "sequence"], false, 2),
            Op::TorsionChar => s(&["module", "sequence"], false, 1),
            Op::Mgm | Op::CompleteChar => s(&["module", "sequence"], true, 2),
            Op::KoszulLimitContrast => s(&["sequence"], true, 1),
            Op::GmDuality => s(&["module", "target", "sequence"], true, 2),
            Op::Permanence => s(&["sequence", "other"], true, 1),
            Op::BaseChange => s(&["map", "sequence", "other", "module"], true, 1),
        }
    }
}

/// Values used when a task block leaves a parameter unset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskDefaults {
    pub level: usize,
    pub window: (i64, i64),
    pub resolution_length: Option<usize>,
    pub seed: u64,
}

impl Default for TaskDefaults {
    fn default() -> Self {
        Self {
            level: 4,
            window: (0, 4),
            resolution_length: None,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub op: Op,
    pub line: usize,
    /// (role, name) of the scenario objects the task reads.
    pub refs: Vec<(String, String)>,
    pub level: usize,
    pub window: Option<(i64, i64)>,
    pub resolution_length: Option<usize>,
    pub seed: u64,
}

fn out_of_bounds(line: usize, param: &str, value: impl fmt::Display, bounds: impl Into<String>) -> CliError {
    CliError::OutOfBounds {
        line,
        param: param.into(),
        value: value.to_string(),
        bounds: bounds.into(),
    }
}

pub fn check_level(line: usize, level: usize, min: usize) -> Result<(), CliError> {
    if level < min || level > MAX_LEVEL {
        return Err(out_of_bounds(line, "level", level, format!("[{min}, {MAX_LEVEL}]")));
    }
    Ok(())
}

pub fn check_window(line: usize, w: (i64, i64)) -> Result<(), CliError> {
    let ok = w.0 <= w.1 && w.1 - w.0 < MAX_WINDOW_WIDTH && w.0.abs() <= MAX_WINDOW_ABS && w.1.abs() <= MAX_WINDOW_ABS;
    if !ok {
        return Err(out_of_bounds(
            line,
            "window",
            format!("[{}, {}]", w.0, w.1),
            format!("lo ≤ hi, width < {MAX_WINDOW_WIDTH}, |d| ≤ {MAX_WINDOW_ABS}"),
        ));
    }
    Ok(())
}

pub fn check_resolution_length(line: usize, l: usize) -> Result<(), CliError> {
    if l == 0 || l > MAX_RESOLUTION_LENGTH {
        return Err(out_of_bounds(line, "resolution_length", l, format!("[1, {MAX_RESOLUTION_LENGTH}]")));
    }
    Ok(())
}

impl Task {
    pub(crate) fn from_block(op: Op, b: &Block, sc: &Scenario, defaults: &TaskDefaults) -> Result<Self, CliError> {
        let sig = op.signature();
        let mut allowed: Vec<&str> = sig.refs.to_vec();
        allowed.extend(["level", "seed"]);
        if sig.window {
            allowed.push("window");
        }
        if sig.resolution_length {
            allowed.push("resolution_length");
        }
        b.reject_unknown(&allowed)?;

        let mut refs = Vec::new();
        for role in sig.refs {
            let e = b
                .get(role)
                .ok_or_else(|| CliError::parse(b.line, 1, format!("task `{op}` needs `{role}`")))?;
            let name = parse_ident(e)?;
            let (kind, known) = match *role {
                "sequence" | "other" => ("sequence", sc.sequences.iter().any(|s| s.0 == name)),
                "module" | "target" => ("module", sc.modules.iter().any(|s| s.0 == name)),
                _ => ("map", sc.maps.iter().any(|s| s.0 == name)),
            };
            if !known {
                return Err(CliError::Unresolved { line: e.line, kind, name });
            }
            refs.push((role.to_string(), name));
        }

        let level = match b.get("level") {
            Some(e) => parse_int(e)?,
            None => defaults.level,
        };
        check_level(b.get("level").map_or(b.line, |e| e.line), level, sig.min_level)?;
        let window = if sig.window {
            let w = match b.get("window") {
                Some(e) => parse_window(e)?,
                None => defaults.window,
            };
            check_window(b.get("window").map_or(b.line, |e| e.line), w)?;
            Some(w)
        } else {
            None
        };
        let resolution_length = if sig.resolution_length {
            let l = match b.get("resolution_length") {
                Some(e) => Some(parse_int(e)?),
                None => defaults.resolution_length,
            };
            if let Some(l) = l {
                check_resolution_length(b.get("resolution_length").map_or(b.line, |e| e.line), l)?;
            }
            l
        } else {
            None
        };
        let seed = match b.get("seed") {
            Some(e) => parse_int(e)?,
            None => defaults.seed,
        };
        let t = Task {
            op,
            line: b.line,
            refs,
            level,
            window,
            resolution_length,
            seed,
        };
        t.check_rings(sc)?;
        Ok(t)
    }

    pub fn get(&self, role: &str) -> &str {
        &self.refs.iter().find(|r| r.0 == role).expect("role required by the signature").1
    }

    /// Inputs must live over the ring the operation expects.
    fn check_rings(&self, sc: &Scenario) -> Result<(), CliError> {
        let seq_ring = sc.sequence(self.get("sequence")).ring().clone();
        let mismatch = |what: &str| CliError::parse(self.line, 1, format!("{what} lives over a different ring than the task expects"));
        if self.op == Op::BaseChange {
            let f = sc.map(self.get("map"));
            if *f.source != *seq_ring {
                return Err(mismatch("sequence"));
            }
            if *sc.sequence(self.get("other")).ring().as_ref() != *f.target {
                return Err(mismatch("other"));
            }
            if *sc.module(self.get("module")).module.ring().as_ref() != *f.target {
                return Err(mismatch("module"));
            }
            return Ok(());
        }
        for (role, name) in &self.refs {
            let r = match role.as_str() {
                "other" => sc.sequence(name).ring().clone(),
                "module" | "target" => sc.module(name).module.ring().clone(),
                _ => continue,
            };
            if *r != *seq_ring {
                return Err(mismatch(role));
            }
        }
        Ok(())
    }

    pub fn canonical(&self) -> String {
        let mut s = format!("{}", self.op);
        for (role, name) in &self.refs {
            s += &format!(" {role}={name}");
        }
        s += &format!(" level={}", self.level);
        if let Some(w) = self.window {
            s += &format!(" window=[{}, {}]", w.0, w.1);
        }
        if let Some(l) = self.resolution_length {
            s += &format!(" resolution_length={l}");
        }
        s += &format!(" seed={}", self.seed);
        s
    }
}
