//! Line-oriented stream files.
//!
//! ```text
//! 3 1 psa
//! + 1 2
//! ?
//! ```
//!
//! The first line is `n k mode`; every following line is an insertion
//! `+ u v`, a deletion `- u v` (with `1 <= u < v <= n`), or a query `?`.
//! Files are canonical: single spaces, no blank lines, no leading zeros.
//! Parsing and emitting are inverse byte for byte.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::ShadowGraph;
use crate::types::{Config, Edge, Op, StreamUpdate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Psa,
    Pdpsa,
    Dpsa,
    Fvs,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Psa, Mode::Pdpsa, Mode::Dpsa, Mode::Fvs];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Psa => "psa",
            Mode::Pdpsa => "pdpsa",
            Mode::Dpsa => "dpsa",
            Mode::Fvs => "fvs",
        }
    }

    /// Modes whose algorithms accept insertions only.
    pub fn insertion_only(self) -> bool {
        matches!(self, Mode::Psa | Mode::Fvs)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Item {
    Update(StreamUpdate),
    Query,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamFile {
    pub n: u32,
    pub k: u32,
    pub mode: Mode,
    pub items: Vec<Item>,
    pub trailing_newline: bool,
}

impl StreamFile {
    pub fn new(n: u32, k: u32, mode: Mode) -> Self {
        StreamFile {
            n,
            k,
            mode,
            items: Vec::new(),
            trailing_newline: true,
        }
    }

    pub fn push_update(&mut self, up: StreamUpdate) {
        self.items.push(Item::Update(up));
    }

    pub fn push_query(&mut self) {
        self.items.push(Item::Query);
    }

    pub fn config(&self) -> Config {
        Config::new(self.n, self.k)
    }

    pub fn updates(&self) -> impl Iterator<Item = StreamUpdate> + '_ {
        self.items.iter().filter_map(|it| match it {
            Item::Update(up) => Some(*up),
            Item::Query => None,
        })
    }

    pub fn query_count(&self) -> usize {
        self.items.iter().filter(|it| **it == Item::Query).count()
    }

    /// Replays the updates, rejecting inserts of live edges, deletes of
    /// absent ones, and deletions in insertion-only modes.
    pub fn validate(&self) -> Result<ShadowGraph> {
        let mut shadow = ShadowGraph::new(self.n);
        for up in self.updates() {
            if up.op == Op::Delete && self.mode.insertion_only() {
                return Err(Error::InvalidStream {
                    at: shadow.clock() + 1,
                    reason: format!("deletion in insertion-only mode {}", self.mode),
                });
            }
            shadow.apply_update(up)?;
        }
        Ok(shadow)
    }
}

fn number(tok: &str, line: usize, what: &str) -> Result<u32> {
    let canonical = !tok.is_empty()
        && tok.bytes().all(|b| b.is_ascii_digit())
        && (tok == "0" || !tok.starts_with('0'));
    let parsed = canonical.then(|| tok.parse::<u32>().ok()).flatten();
    parsed.ok_or_else(|| Error::Parse {
        line,
        message: format!("bad {what} {tok:?}"),
    })
}

fn parse_header(text: &str) -> Result<(u32, u32, Mode)> {
    let err = |message: String| Error::Parse { line: 1, message };
    let toks: Vec<&str> = text.split(' ').collect();
    let [n, k, mode] = toks[..] else {
        return Err(err(format!("header must be \"n k mode\", got {text:?}")));
    };
    let n = number(n, 1, "n")?;
    if n == 0 {
        return Err(err("n must be positive".into()));
    }
    let k = number(k, 1, "k")?;
    let mode = mode.parse().map_err(err)?;
    Ok((n, k, mode))
}

fn parse_item(text: &str, line: usize, n: u32) -> Result<Item> {
    if text == "?" {
        return Ok(Item::Query);
    }
    let err = |message: String| Error::Parse { line, message };
    let toks: Vec<&str> = text.split(' ').collect();
    let [op, u, v] = toks[..] else {
        return Err(err(format!(
            "expected \"+ u v\", \"- u v\" or \"?\", got {text:?}"
        )));
    };
    let op = match op {
        "+" => Op::Insert,
        "-" => Op::Delete,
        _ => return Err(err(format!("unknown operation {op:?}"))),
    };
    let (u, v) = (number(u, line, "vertex")?, number(v, line, "vertex")?);
    if u >= v {
        return Err(err(format!("endpoints must satisfy u < v, got {u} {v}")));
    }
    if u == 0 || v > n {
        return Err(err(format!("edge ({u},{v}) outside [1, {n}]")));
    }
    let edge = Edge::new(u, v).map_err(|e| err(e.to_string()))?;
    Ok(Item::Update(StreamUpdate { op, edge }))
}

pub fn parse_stream(text: &str) -> Result<StreamFile> {
    let trailing_newline = text.ends_with('\n');
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    let (n, k, mode) = parse_header(header)?;
    let items = lines
        .enumerate()
        .map(|(i, l)| parse_item(l, i + 2, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(StreamFile {
        n,
        k,
        mode,
        items,
        trailing_newline,
    })
}

pub fn emit_stream(f: &StreamFile) -> String {
    let mut out = format!("{} {} {}", f.n, f.k, f.mode);
    for it in &f.items {
        out.push('\n');
        match it {
            Item::Query => out.push('?'),
            Item::Update(up) => {
                let sign = if up.op == Op::Insert { '+' } else { '-' };
                out.push_str(&format!("{sign} {} {}", up.edge.u(), up.edge.v()));
            }
        }
    }
    if f.trailing_newline {
        out.push('\n');
    }
    out
}
