//! Resumable per-graph results for long sweeps.
//!
//! ```text
//! # bicm checkpoint v1 n=7 p=2
//! F?ovw 1 111
//! F?o~w 0 10
//! #tally checked=2 bicm=1
//! ```

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckpointEntry {
    pub graph6: String,
    pub bicm: bool,
    /// Verdict for `k = 1, 2, ...`.
    pub per_k: Vec<bool>,
}

#[derive(Debug)]
pub struct Checkpoint {
    path: PathBuf,
    header: String,
    order: Vec<String>,
    entries: HashMap<String, CheckpointEntry>,
}

fn flag(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

fn parse_flag(c: char) -> Result<bool> {
    match c {
        '1' => Ok(true),
        '0' => Ok(false),
        _ => Err(Error::Parse(format!("bad checkpoint flag {c:?}"))),
    }
}

impl Checkpoint {
    pub fn file_name(n: usize, p: u32) -> String {
        format!("theorem-n{n}-p{p}.ckpt")
    }

    /// Load `dir/theorem-n{n}-p{p}.ckpt`, or start empty if it does not exist.
    pub fn open(dir: &Path, n: usize, p: u32) -> Result<Self> {
        let path = dir.join(Self::file_name(n, p));
        let header = format!("# bicm checkpoint v1 n={n} p={p}");
        let mut ck = Checkpoint {
            path,
            header,
            order: Vec::new(),
            entries: HashMap::new(),
        };
        if !ck.path.exists() {
            return Ok(ck);
        }
        let text = fs::read_to_string(&ck.path)?;
        let mut lines = text.lines();
        if lines.next() != Some(ck.header.as_str()) {
            return Err(Error::Parse(format!(
                "{} was written for a different run",
                ck.path.display()
            )));
        }
        let mut tally = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("#tally ") {
                tally = rest
                    .split_whitespace()
                    .find_map(|kv| kv.strip_prefix("checked="))
                    .and_then(|v| v.parse::<usize>().ok());
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(g6), Some(b), per) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Parse(format!("bad checkpoint line {line:?}")));
            };
            let entry = CheckpointEntry {
                graph6: g6.to_string(),
                bicm: parse_flag(b.chars().next().unwrap_or('?'))?,
                per_k: per
                    .unwrap_or("")
                    .chars()
                    .map(parse_flag)
                    .collect::<Result<_>>()?,
            };
            ck.record(entry);
        }
        if tally != Some(ck.order.len()) {
            return Err(Error::Parse(format!(
                "{} is truncated: tally does not match its entries",
                ck.path.display()
            )));
        }
        Ok(ck)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn get(&self, graph6: &str) -> Option<&CheckpointEntry> {
        self.entries.get(graph6)
    }

    pub fn record(&mut self, entry: CheckpointEntry) {
        if !self.entries.contains_key(&entry.graph6) {
            self.order.push(entry.graph6.clone());
        }
        self.entries.insert(entry.graph6.clone(), entry);
    }

    /// Write atomically through a sibling temp file.
    pub fn save(&self) -> Result<()> {
        let mut out = String::with_capacity(16 * self.order.len() + 64);
        out.push_str(&self.header);
        out.push('\n');
        let mut bicm = 0;
        for g6 in &self.order {
            let e = &self.entries[g6];
            bicm += usize::from(e.bicm);
            out.push_str(g6);
            out.push(' ');
            out.push(flag(e.bicm));
            out.push(' ');
            out.extend(e.per_k.iter().map(|&b| flag(b)));
            out.push('\n');
        }
        out.push_str(&format!(
            "#tally checked={} bicm={bicm}\n",
            self.order.len()
        ));
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension("ckpt.tmp");
        fs::write(&tmp, out)?;
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}
