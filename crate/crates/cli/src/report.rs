//! Report rendering. The document is an indented key/value tree with `-`
//! list items; strings are double-quoted with escapes. Lines whose key is
//! `timing_ms` are excluded from `report_hash`.

use sha2::{Digest, Sha256};

use crate::run::TaskResult;
use crate::scenario::Scenario;

pub const ENGINE: &str = concat!("derived-engine ", env!("CARGO_PKG_VERSION"));
const TIMING_KEY: &str = "timing_ms:";

fn q(s: &str) -> String {
    format!("{s:?}")
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn sha256_hex(s: &str) -> String {
    hex(&Sha256::digest(s.as_bytes()))
}

/// Hash of a rendered report with timing lines removed.
pub fn report_hash(body: &str) -> String {
    let kept: String = body
        .lines()
        .filter(|l| !l.trim_start().starts_with(TIMING_KEY))
        .map(|l| format!("{l}\n"))
        .collect();
    sha256_hex(&kept)
}

pub fn input_hash(sc: &Scenario) -> String {
    sha256_hex(&sc.canonical())
}

fn list<T>(out: &mut String, indent: &str, key: &str, items: &[T], mut item: impl FnMut(&mut String, &T)) {
    if items.is_empty() {
        out.push_str(&format!("{indent}{key}: []\n"));
        return;
    }
    out.push_str(&format!("{indent}{key}:\n"));
    for x in items {
        item(out, x);
    }
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or("null".to_string(), |x| x.to_string())
}

fn task(out: &mut String, r: &TaskResult) {
    let t = &r.task;
    out.push_str(&format!("  - index: {}\n", r.index));
    out.push_str(&format!("    op: {}\n", t.op));
    out.push_str(&format!("    line: {}\n", t.line));
    out.push_str(&format!("    parameters: {}\n", q(&t.canonical())));
    out.push_str(&format!("    verdict: {}\n", r.report.outcome));
    out.push_str(&format!("    reason: {}\n", r.reason.as_deref().map_or("null".to_string(), q)));
    list(out, "    ", "certificates", &r.report.certificates, |o, (k, v)| {
        o.push_str(&format!("      - key: {}\n        value: {}\n", q(k), q(v)));
    });
    list(out, "    ", "checks", &r.report.checks, |o, c| {
        o.push_str(&format!(
            "      - name: {}\n        passed: {}\n        detail: {}\n",
            q(&c.name),
            c.passed,
            q(&c.detail)
        ));
    });
    list(out, "    ", "witnesses", &r.report.witnesses, |o, w| {
        o.push_str(&format!("      - {}\n", q(w)));
    });
    list(out, "    ", "tables", &r.report.tables, |o, tb| {
        o.push_str(&format!("      - name: {}\n", q(&tb.name)));
        list(o, "        ", "rows", &tb.rows, |o, e| {
            let dims: Vec<String> = e.dims.iter().map(ToString::to_string).collect();
            o.push_str(&format!(
                "          - {{k: {}, d: {}, dims: [{}], stable_level: {}, stable_dim: {}}}\n",
                e.k,
                e.d,
                dims.join(", "),
                opt(e.stable_level),
                opt(e.stable_dim)
            ));
        });
    });
    out.push_str(&format!("    {TIMING_KEY} {}\n", r.elapsed.as_millis()));
}

/// Report metadata that does not come from the tasks.
pub struct Meta<'a> {
    pub order: &'a str,
    pub seed: u64,
}

pub fn render(sc: &Scenario, results: &[TaskResult], meta: &Meta) -> String {
    let mut out = String::new();
    out.push_str(&format!("engine: {}\n", q(ENGINE)));
    out.push_str(&format!("input_hash: {}\n", q(&input_hash(sc))));
    out.push_str(&format!("order: {}\n", meta.order));
    out.push_str(&format!("seed: {}\n", meta.seed));
    list(&mut out, "", "tasks", results, task);
    let h = report_hash(&out);
    out.push_str(&format!("report_hash: {}\n", q(&h)));
    out
}
