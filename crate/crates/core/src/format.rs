//! Text encodings: digraph6 and the native `n:HEX` tournament format.
//!
//! The native format lists the orientation of every pair `i < j` in
//! lexicographic order, bit set iff the arc is `i -> j`, packed
//! most-significant bit first and zero-padded to a whole byte.

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, Tournament, MAX_VERTICES};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Packs bits MSB-first into bytes, zero-padding the last byte.
pub(crate) fn pack_bits(bits: impl IntoIterator<Item = bool>) -> Vec<u8> {
    let mut out = Vec::new();
    for (i, b) in bits.into_iter().enumerate() {
        if i % 8 == 0 {
            out.push(0);
        }
        if b {
            *out.last_mut().unwrap() |= 0x80 >> (i % 8);
        }
    }
    out
}

#[inline]
pub(crate) fn get_bit(bytes: &[u8], i: usize) -> bool {
    bytes[i / 8] & (0x80 >> (i % 8)) != 0
}

/// Number of vertex pairs, `C(n, 2)`.
pub(crate) fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Upper-triangle orientation bytes of a tournament.
pub(crate) fn tournament_bytes(t: &OrientedGraph) -> Vec<u8> {
    let n = t.order();
    pack_bits((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| t.has_arc(i, j)))
}

pub(crate) fn tournament_from_bytes(n: usize, bytes: &[u8]) -> Result<Tournament> {
    let need = pairs(n).div_ceil(8);
    if bytes.len() != need {
        return Err(parse_err(format!(
            "tournament on {n} vertices needs {need} bytes, got {}",
            bytes.len()
        )));
    }
    let mut idx = 0;
    let t = Tournament::from_fn(n, |_, _| {
        let b = get_bit(bytes, idx);
        idx += 1;
        b
    })?;
    for k in pairs(n)..need * 8 {
        if get_bit(bytes, k) {
            return Err(parse_err("nonzero padding bits"));
        }
    }
    Ok(t)
}

/// Encodes a tournament as `n:HEX`.
pub fn to_hex(t: &Tournament) -> String {
    format!("{}:{}", t.order(), hex::encode(tournament_bytes(t)))
}

/// Parses `n:HEX` (either hex case).
pub fn from_hex(s: &str) -> Result<Tournament> {
    let (n, payload) = s
        .trim()
        .split_once(':')
        .ok_or_else(|| parse_err("expected n:HEX"))?;
    let n: usize = n.parse().map_err(|_| parse_err(format!("bad vertex count {n:?}")))?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
        });
    }
    let bytes = hex::decode(payload).map_err(|e| parse_err(e.to_string()))?;
    tournament_from_bytes(n, &bytes)
}

/// Encodes any oriented graph in digraph6.
pub fn to_digraph6(g: &OrientedGraph) -> String {
    let n = g.order();
    let mut s = String::from("&");
    if n <= 62 {
        s.push((n as u8 + 63) as char);
    } else {
        s.push('~');
        for shift in [12, 6, 0] {
            s.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let bits: Vec<bool> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| g.has_arc(i, j))
        .collect();
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 32 >> k;
            }
        }
        s.push((v + 63) as char);
    }
    s
}

/// Parses digraph6, with or without the `>>digraph6<<` header.
pub fn from_digraph6(s: &str) -> Result<OrientedGraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>digraph6<<").unwrap_or(s);
    let body = s
        .strip_prefix('&')
        .ok_or_else(|| parse_err("digraph6 must start with '&'"))?
        .as_bytes();
    if body.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(parse_err("digraph6 character outside 63..=126"));
    }
    let (n, rest) = match body.first() {
        None => return Err(parse_err("missing vertex count")),
        Some(&126) => {
            if body.len() < 4 || body[1] == 126 {
                return Err(parse_err("unsupported digraph6 size field"));
            }
            let n = body[1..4]
                .iter()
                .fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
            (n, &body[4..])
        }
        Some(&c) => ((c - 63) as usize, &body[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            cap: MAX_VERTICES,
        });
    }
    let need = (n * n).div_ceil(6);
    if rest.len() != need {
        return Err(parse_err(format!(
            "digraph6 for {n} vertices needs {need} data characters, got {}",
            rest.len()
        )));
    }
    let bit_at = |k: usize| (rest[k / 6] - 63) & (32 >> (k % 6)) != 0;
    let mut rows = vec![0u64; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            if bit_at(i * n + j) {
                *row |= 1u64 << j;
            }
        }
    }
    OrientedGraph::from_out_rows(rows)
}

/// Oriented graphs serialize as digraph6 strings.
impl serde::Serialize for OrientedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_digraph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for OrientedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_digraph6(&s).map_err(serde::de::Error::custom)
    }
}

/// Tournaments serialize in the `n:HEX` format.
impl serde::Serialize for Tournament {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&to_hex(self))
    }
}

impl<'de> serde::Deserialize<'de> for Tournament {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        from_hex(&s).map_err(serde::de::Error::custom)
    }
}
