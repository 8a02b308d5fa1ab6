//! Scenario files: `[kind name]` block headers followed by `key = value`
//! lines. Values may continue onto following lines while a `[` is open.
//! `#` starts a comment.

use algebra_core::parse::parse_poly_at;
use algebra_core::{make_ring, ElementSequence, Field, FpModule, Matrix, Poly, RingRef, TermOrder};
use complex::Complex;
use derived::RingMap;

use crate::error::CliError;
use crate::task::{Op, Task, TaskDefaults};

/// A character with its 1-based source position.
#[derive(Clone, Copy, Debug)]
struct Ch {
    c: char,
    line: usize,
    col: usize,
}

/// A run of source characters that keeps positions for error reporting.
#[derive(Clone, Debug)]
pub(crate) struct Located {
    chars: Vec<Ch>,
    /// Position just past the end, for errors on empty values.
    end: (usize, usize),
}

impl Located {
    fn text(&self) -> String {
        self.chars.iter().map(|c| c.c).collect()
    }

    pub(crate) fn pos(&self) -> (usize, usize) {
        self.chars.first().map_or(self.end, |c| (c.line, c.col))
    }

    fn err(&self, message: impl Into<String>) -> CliError {
        let (l, c) = self.pos();
        CliError::parse(l, c, message)
    }

    fn trim(&self) -> Located {
        let s = self.chars.iter().position(|c| !c.c.is_whitespace());
        let e = self.chars.iter().rposition(|c| !c.c.is_whitespace());
        match (s, e) {
            (Some(s), Some(e)) => Located {
                chars: self.chars[s..=e].to_vec(),
                end: self.end,
            },
            _ => Located {
                chars: vec![],
                end: self.pos(),
            },
        }
    }

    fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    fn split(&self, sep: char) -> Vec<Located> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut end = self.pos();
        for ch in &self.chars {
            if ch.c == sep {
                out.push(Located { chars: std::mem::take(&mut cur), end: (ch.line, ch.col) });
            } else {
                cur.push(*ch);
            }
            end = (ch.line, ch.col + 1);
        }
        out.push(Located { chars: cur, end });
        out.into_iter().map(|l| l.trim()).collect()
    }

    /// Comma-separated items; an empty value gives no items.
    fn list(&self) -> Result<Vec<Located>, CliError> {
        let t = self.trim();
        if t.is_empty() {
            return Ok(vec![]);
        }
        let items = t.split(',');
        if let Some(e) = items.iter().find(|i| i.is_empty()) {
            return Err(e.err("empty list item"));
        }
        Ok(items)
    }

    fn ident(&self) -> Result<String, CliError> {
        let s = self.trim().text();
        let ok = s.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if ok {
            Ok(s)
        } else {
            Err(self.trim().err(format!("expected a name, found `{s}`")))
        }
    }

    fn int<T: std::str::FromStr>(&self) -> Result<T, CliError> {
        let t = self.trim();
        t.text().parse().map_err(|_| t.err(format!("expected an integer, found `{}`", t.text())))
    }

    fn poly(&self, ring: &RingRef) -> Result<Poly, CliError> {
        let t = self.trim();
        if t.is_empty() {
            return Err(t.err("expected a polynomial"));
        }
        if t.chars.iter().any(|c| c.line != t.chars[0].line) {
            return Err(t.err("a polynomial must fit on one line"));
        }
        let (line, col) = t.pos();
        let p = parse_poly_at(ring.ctx(), ring.variables(), &t.text(), line, col).map_err(|e| match e {
            algebra_core::AlgebraError::Parse { line, column, message } => CliError::parse(line, column, message),
            e => t.err(e.to_string()),
        })?;
        Ok(ring.nf(&p))
    }

    /// `[a, b; c, d]`: rows separated by `;`, entries by `,`. `[]` has no rows.
    fn matrix(&self, ring: &RingRef) -> Result<Vec<Vec<Poly>>, CliError> {
        let t = self.trim();
        let n = t.chars.len();
        if n < 2 || t.chars[0].c != '[' || t.chars[n - 1].c != ']' {
            return Err(t.err("expected a matrix literal `[a, b; c, d]`"));
        }
        let inner = Located {
            chars: t.chars[1..n - 1].to_vec(),
            end: (t.chars[n - 1].line, t.chars[n - 1].col),
        }
        .trim();
        if inner.is_empty() {
            return Ok(vec![]);
        }
        let rows = inner
            .split(';')
            .iter()
            .map(|r| r.list()?.iter().map(|e| e.poly(ring)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(w) = rows.first().map(Vec::len) {
            if let Some(i) = rows.iter().position(|r| r.len() != w) {
                return Err(inner.split(';')[i].err(format!("row has {} entries, expected {w}", rows[i].len())));
            }
        }
        Ok(rows)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Entry {
    pub key: String,
    pub line: usize,
    pub value: Located,
}

#[derive(Clone, Debug)]
pub(crate) struct Block {
    pub kind: String,
    pub name: Option<String>,
    pub line: usize,
    pub name_col: usize,
    pub entries: Vec<Entry>,
}

impl Block {
    pub(crate) fn reject_unknown(&self, allowed: &[&str]) -> Result<(), CliError> {
        for e in &self.entries {
            if !allowed.contains(&e.key.as_str()) {
                return Err(CliError::parse(e.line, 1, format!("unknown key `{}` in [{}] block", e.key, self.kind)));
            }
        }
        for (i, e) in self.entries.iter().enumerate() {
            if self.entries[..i].iter().any(|f| f.key == e.key) {
                return Err(CliError::parse(e.line, 1, format!("duplicate key `{}`", e.key)));
            }
        }
        Ok(())
    }

    pub(crate) fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn require(&self, key: &str) -> Result<&Entry, CliError> {
        self.get(key)
            .ok_or_else(|| CliError::parse(self.line, 1, format!("[{}] block needs `{key}`", self.kind)))
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn located(line: usize, col0: usize, s: &str) -> Located {
    let chars: Vec<Ch> = s
        .chars()
        .enumerate()
        .map(|(i, c)| Ch { c, line, col: col0 + i })
        .collect();
    Located {
        end: (line, col0 + chars.len()),
        chars,
    }
}

fn bracket_depth(v: &Located) -> i64 {
    v.chars.iter().map(|c| match c.c {
        '[' => 1,
        ']' => -1,
        _ => 0,
    }).sum()
}

pub(crate) fn blocks(text: &str) -> Result<Vec<Block>, CliError> {
    let mut out: Vec<Block> = Vec::new();
    let mut open: Option<Entry> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if let Some(e) = open.as_mut() {
            let mut more = located(line, 1, body);
            e.value.chars.push(Ch { c: ' ', line, col: 0 });
            e.value.chars.append(&mut more.chars);
            e.value.end = more.end;
            if bracket_depth(&e.value) <= 0 {
                let done = open.take().expect("open entry");
                out.last_mut().expect("entries belong to a block").entries.push(done);
            }
            continue;
        }
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = body.len() - body.trim_start().len();
        let col = body[..indent].chars().count() + 1;
        if let Some(rest) = trimmed.strip_prefix('[') {
            let Some(inner) = rest.strip_suffix(']') else {
                return Err(CliError::parse(line, col, "block header must end with `]`"));
            };
            let mut words = inner.split_whitespace();
            let kind = words.next().ok_or_else(|| CliError::parse(line, col, "empty block header"))?;
            let name = words.next().map(str::to_string);
            if let Some(extra) = words.next() {
                return Err(CliError::parse(line, col, format!("unexpected `{extra}` in block header")));
            }
            let name_col = name
                .as_ref()
                .map_or(col + 1, |n| col + 1 + inner.find(n.as_str()).map_or(0, |p| inner[..p].chars().count()));
            out.push(Block {
                kind: kind.to_string(),
                name,
                line,
                name_col,
                entries: vec![],
            });
            continue;
        }
        let Some(eq) = body.find('=') else {
            return Err(CliError::parse(line, col, "expected `key = value` or a block header"));
        };
        if out.is_empty() {
            return Err(CliError::parse(line, col, "entry outside of a block"));
        }
        let key = body[..eq].trim().to_string();
        if key.is_empty() {
            return Err(CliError::parse(line, col, "missing key before `=`"));
        }
        let vcol = body[..eq + 1].chars().count() + 1;
        let value = located(line, vcol, &body[eq + 1..]);
        let entry = Entry { key, line, value };
        if bracket_depth(&entry.value) > 0 {
            open = Some(entry);
        } else {
            out.last_mut().expect("checked above").entries.push(entry);
        }
    }
    if let Some(e) = open {
        return Err(CliError::parse(e.line, e.value.pos().1, "unclosed `[`"));
    }
    Ok(out)
}

/// A module presented by generators and relation columns, placed in one
/// cohomological degree.
#[derive(Clone, Debug)]
pub struct ModuleDef {
    pub module: FpModule,
    pub position: i32,
}

impl ModuleDef {
    pub fn complex(&self) -> Complex {
        Complex::concentrated(&self.module, self.position)
    }
}

#[derive(Clone, Debug)]
pub struct RingDef {
    pub ring: RingRef,
    pub weights: Option<Vec<u32>>,
}

/// A parsed scenario with every name resolved.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub rings: Vec<(String, RingDef)>,
    pub sequences: Vec<(String, ElementSequence)>,
    pub modules: Vec<(String, ModuleDef)>,
    pub maps: Vec<(String, RingMap)>,
    pub tasks: Vec<Task>,
}

fn lookup<'a, T>(items: &'a [(String, T)], name: &str) -> Option<&'a T> {
    items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

impl Scenario {
    pub fn sequence(&self, name: &str) -> &ElementSequence {
        lookup(&self.sequences, name).expect("resolved at parse time")
    }

    pub fn module(&self, name: &str) -> &ModuleDef {
        lookup(&self.modules, name).expect("resolved at parse time")
    }

    pub fn map(&self, name: &str) -> &RingMap {
        lookup(&self.maps, name).expect("resolved at parse time")
    }

    /// Whitespace- and comment-independent rendering of everything that
    /// determines the report.
    pub fn canonical(&self) -> String {
        let mut s = String::new();
        for (n, r) in &self.rings {
            let w = r.weights.as_ref().map_or("none".to_string(), |w| format!("{w:?}"));
            s += &format!("ring {n} {} order={:?} weights={w}\n", r.ring, r.ring.term_order());
        }
        for (n, q) in &self.sequences {
            s += &format!("sequence {n} {}\n", q.render());
        }
        for (n, m) in &self.modules {
            let ring = m.module.ring();
            let rels = m.module.relations().render(ring);
            s += &format!(
                "module {n} position={} degrees={:?} generators={} relations={rels:?}\n",
                m.position,
                m.module.degrees(),
                m.module.ngens()
            );
        }
        for (n, f) in &self.maps {
            let im: Vec<String> = f.images.iter().map(|p| f.target.render(p)).collect();
            s += &format!("map {n} {} -> {} images={im:?}\n", f.source, f.target);
        }
        for t in &self.tasks {
            s += &format!("task {}\n", t.canonical());
        }
        s
    }
}

fn name_of(b: &Block) -> Result<String, CliError> {
    b.name
        .clone()
        .ok_or_else(|| CliError::parse(b.line, b.name_col, format!("[{}] block needs a name", b.kind)))
}

fn parse_field(v: &Located) -> Result<Field, CliError> {
    let t = v.trim();
    let s = t.text();
    if s == "QQ" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.trim().parse::<u64>().ok())
        .ok_or_else(|| t.err(format!("field must be `QQ` or `GF(p)`, found `{s}`")))?;
    Field::prime(p).map_err(|e| t.err(e.to_string()))
}

fn parse_ring(b: &Block, order: TermOrder) -> Result<RingDef, CliError> {
    b.reject_unknown(&["field", "variables", "weights", "quotient"])?;
    let field = match b.get("field") {
        Some(e) => parse_field(&e.value)?,
        None => Field::Rational,
    };
    let vars_e = b.require("variables")?;
    let vars: Vec<String> = vars_e.value.list()?.iter().map(|v| v.ident()).collect::<Result<_, _>>()?;
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let weights = match b.get("weights") {
        Some(e) if e.value.trim().text() == "none" => None,
        Some(e) => {
            let w: Vec<u32> = e.value.list()?.iter().map(|x| x.int()).collect::<Result<_, _>>()?;
            if w.len() != vars.len() || w.contains(&0) {
                return Err(e.value.err("weights must be positive, one per variable"));
            }
            Some(w)
        }
        None => Some(vec![1; vars.len()]),
    };
    let err_at = |e: &Located, x: algebra_core::AlgebraError| e.err(x.to_string());
    let ambient = make_ring(field.clone(), &names, weights.as_deref(), vec![], order).map_err(|x| err_at(&vars_e.value, x))?;
    let (quotient, qe) = match b.get("quotient") {
        Some(e) => (
            e.value.list()?.iter().map(|p| p.poly(&ambient)).collect::<Result<Vec<_>, _>>()?,
            Some(e),
        ),
        None => (vec![], None),
    };
    let ring = make_ring(field, &names, weights.as_deref(), quotient, order)
        .map_err(|x| err_at(qe.map_or(&vars_e.value, |e| &e.value), x))?;
    Ok(RingDef { ring, weights })
}

/// Parses and resolves a scenario. `defaults` fill task parameters that a
/// task block leaves unset.
pub fn parse_scenario(text: &str, order: TermOrder, defaults: &TaskDefaults) -> Result<Scenario, CliError> {
    let mut sc = Scenario {
        rings: vec![],
        sequences: vec![],
        modules: vec![],
        maps: vec![],
        tasks: vec![],
    };
    for b in blocks(text)? {
        match b.kind.as_str() {
            "ring" => {
                let name = b.name.clone().unwrap_or_else(|| "A".to_string());
                if lookup(&sc.rings, &name).is_some() {
                    return Err(CliError::parse(b.line, b.name_col, format!("ring `{name}` defined twice")));
                }
                let r = parse_ring(&b, order)?;
                sc.rings.push((name, r));
            }
            "sequence" => {
                let name = name_of(&b)?;
                if lookup(&sc.sequences, &name).is_some() {
                    return Err(CliError::parse(b.line, b.name_col, format!("sequence `{name}` defined twice")));
                }
                b.reject_unknown(&["ring", "elements"])?;
                let ring = ring_of(&sc, &b)?;
                let e = b.require("elements")?;
                let elems = e.value.list()?.iter().map(|p| p.poly(&ring)).collect::<Result<Vec<_>, _>>()?;
                let seq = ElementSequence::new(&ring, elems).map_err(|x| e.value.err(x.to_string()))?;
                sc.sequences.push((name, seq));
            }
            "module" => {
                let name = name_of(&b)?;
                if lookup(&sc.modules, &name).is_some() {
                    return Err(CliError::parse(b.line, b.name_col, format!("module `{name}` defined twice")));
                }
                let ring = ring_of(&sc, &b)?;
                let m = parse_module(&b, &ring)?;
                sc.modules.push((name, m));
            }
            "map" => {
                let name = name_of(&b)?;
                if lookup(&sc.maps, &name).is_some() {
                    return Err(CliError::parse(b.line, b.name_col, format!("map `{name}` defined twice")));
                }
                b.reject_unknown(&["source", "target", "images"])?;
                let source = named_ring(&sc, b.require("source")?)?;
                let target = named_ring(&sc, b.require("target")?)?;
                let e = b.require("images")?;
                let images = e.value.list()?.iter().map(|p| p.poly(&target)).collect::<Result<Vec<_>, _>>()?;
                let f = RingMap::new(&source, &target, images).map_err(|x| e.value.err(x.to_string()))?;
                sc.maps.push((name, f));
            }
            "task" => {
                let name = name_of(&b)?;
                let op: Op = name.parse().map_err(|_| CliError::UnknownTask { line: b.line, name: name.clone() })?;
                let t = Task::from_block(op, &b, &sc, defaults)?;
                sc.tasks.push(t);
            }
            other => {
                return Err(CliError::parse(b.line, 2, format!("unknown block kind `{other}`")));
            }
        }
    }
    Ok(sc)
}

fn named_ring(sc: &Scenario, e: &Entry) -> Result<RingRef, CliError> {
    let name = e.value.ident()?;
    lookup(&sc.rings, &name)
        .map(|r| r.ring.clone())
        .ok_or(CliError::Unresolved { line: e.line, kind: "ring", name })
}

fn ring_of(sc: &Scenario, b: &Block) -> Result<RingRef, CliError> {
    match b.get("ring") {
        Some(e) => named_ring(sc, e),
        None => sc
            .rings
            .first()
            .map(|r| r.1.ring.clone())
            .ok_or_else(|| CliError::parse(b.line, 1, "no [ring] block precedes this block")),
    }
}

fn parse_module(b: &Block, ring: &RingRef) -> Result<ModuleDef, CliError> {
    b.reject_unknown(&["ring", "generators", "degrees", "relations", "position"])?;
    let degrees: Option<Vec<i64>> = match b.get("degrees") {
        Some(e) => {
            if !ring.is_graded() {
                return Err(e.value.err("generator degrees need a graded ring"));
            }
            Some(e.value.list()?.iter().map(|x| x.int()).collect::<Result<_, _>>()?)
        }
        None => None,
    };
    let ngens = match (b.get("generators"), &degrees) {
        (Some(e), d) => {
            let n: usize = e.value.int()?;
            if let Some(d) = d {
                if d.len() != n {
                    return Err(e.value.err(format!("{n} generators but {} degrees", d.len())));
                }
            }
            n
        }
        (None, Some(d)) => d.len(),
        (None, None) => return Err(CliError::parse(b.line, 1, "[module] block needs `generators` or `degrees`")),
    };
    let degrees = match degrees {
        Some(d) => Some(d),
        None if ring.is_graded() => Some(vec![0; ngens]),
        None => None,
    };
    let rels = match b.get("relations") {
        Some(e) => {
            let rows = e.value.matrix(ring)?;
            if rows.is_empty() {
                Matrix::zeros(ngens, 0)
            } else if rows.len() != ngens {
                return Err(e.value.err(format!("relation matrix has {} rows, expected one per generator ({ngens})", rows.len())));
            } else {
                Matrix::from_rows(rows)
            }
        }
        None => Matrix::zeros(ngens, 0),
    };
    let position = match b.get("position") {
        Some(e) => e.value.int()?,
        None => 0,
    };
    let module = FpModule::new(ring, rels, degrees).map_err(|x| {
        let e = b.get("relations").or(b.get("degrees")).map_or((b.line, 1), |e| e.value.pos());
        CliError::parse(e.0, e.1, x.to_string())
    })?;
    Ok(ModuleDef { module, position })
}

/// Reads a `lo, hi` pair.
pub(crate) fn parse_window(e: &Entry) -> Result<(i64, i64), CliError> {
    let items = e.value.list()?;
    if items.len() != 2 {
        return Err(e.value.err("window needs two integers `lo, hi`"));
    }
    Ok((items[0].int()?, items[1].int()?))
}

pub(crate) fn parse_int<T: std::str::FromStr>(e: &Entry) -> Result<T, CliError> {
    e.value.int()
}

pub(crate) fn parse_ident(e: &Entry) -> Result<String, CliError> {
    e.value.ident()
}
