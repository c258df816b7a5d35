//! Construction expressions such as `comp(P(3),C(3))` or `blow(C(3),[2,1,1])`.
//!
//! ```text
//! expr := NAME | NAME '(' arg (',' arg)* ')' | digraph6 | n:HEX
//! arg  := expr | INTEGER | '[' INTEGER (',' INTEGER)* ']'
//! ```
//!
//! Names: `TT(k) P(k) C(k) I(n) B(s,t) PP(k,l) CC(k,l) comp(X,Y) join(X,Y)
//! blow(X,[n1,...]) sub(X,l) rev(X) tildeT7 Ta Tb Tc Td Te rot11 QR(p)
//! knn(n) Q(l) univ(n,k)`. Whitespace is ignored.

use crate::construct::{
    arrow_join, bipartite_oriented, blow_up, composition, directed_cycle, directed_path, independent_set,
    knn_orientation, power_cycle, power_path, quadratic_residue_tournament, rotational_11, special_t, tilde_t7,
    transitive_tournament, SpecialTournament,
};
use crate::error::{Error, Result};
use crate::format::{from_digraph6, from_hex};
use crate::graph::OrientedGraph;
use crate::layered::{q_gadget, subdivide};
use crate::tau::build_universal_dk;

/// Names accepted by [`parse`], with their arities as written in help text.
pub const CONSTRUCTIONS: &[&str] = &[
    "TT(k)", "P(k)", "C(k)", "I(n)", "B(s,t)", "PP(k,l)", "CC(k,l)", "comp(X,Y)", "join(X,Y)",
    "blow(X,[n1,...])", "sub(X,l)", "rev(X)", "tildeT7", "Ta", "Tb", "Tc", "Td", "Te", "rot11", "QR(p)",
    "knn(n)", "Q(l)", "univ(n,k)",
];

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

enum Arg {
    Graph(OrientedGraph),
    Int(usize),
    List(Vec<usize>),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn int(&mut self) -> Result<usize> {
        let at = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| err(format!("expected a number at offset {at}")))
    }

    fn arg(&mut self) -> Result<Arg> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Arg::Int(self.int()?)),
            Some(b'[') => {
                self.pos += 1;
                let mut items = vec![self.int()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    items.push(self.int()?);
                }
                self.eat(b']')?;
                Ok(Arg::List(items))
            }
            _ => Ok(Arg::Graph(self.expr()?)),
        }
    }

    fn expr(&mut self) -> Result<OrientedGraph> {
        let at = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphanumeric()).to_string();
        if name.is_empty() {
            return Err(err(format!("expected a construction name at offset {at}")));
        }
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            args.push(self.arg()?);
            while self.peek() == Some(b',') {
                self.pos += 1;
                args.push(self.arg()?);
            }
            self.eat(b')')?;
        }
        build(&name, args)
    }
}

fn build(name: &str, args: Vec<Arg>) -> Result<OrientedGraph> {
    use Arg::*;
    let special = |w| Ok(special_t(w).into_inner());
    match (name, args.as_slice()) {
        ("TT", [Int(k)]) => Ok(transitive_tournament(*k)?.into_inner()),
        ("P", [Int(k)]) => directed_path(*k),
        ("C", [Int(k)]) => directed_cycle(*k),
        ("I", [Int(n)]) => independent_set(*n),
        ("B", [Int(s), Int(t)]) => bipartite_oriented(*s, *t),
        ("PP", [Int(k), Int(l)]) => power_path(*k, *l),
        ("CC", [Int(k), Int(l)]) => power_cycle(*k, *l),
        ("comp", [Graph(g), Graph(h)]) => composition(g, h),
        ("join", [Graph(g), Graph(h)]) => arrow_join(g, h),
        ("blow", [Graph(g), List(sizes)]) => blow_up(g, sizes),
        ("sub", [Graph(g), Int(l)]) => subdivide(g, *l),
        ("rev", [Graph(g)]) => Ok(g.reverse()),
        ("tildeT7", []) => Ok(tilde_t7().into_inner()),
        ("Ta", []) => special(SpecialTournament::A),
        ("Tb", []) => special(SpecialTournament::B),
        ("Tc", []) => special(SpecialTournament::C),
        ("Td", []) => special(SpecialTournament::D),
        ("Te", []) => special(SpecialTournament::E),
        ("rot11", []) => Ok(rotational_11().into_inner()),
        ("QR", [Int(p)]) => Ok(quadratic_residue_tournament(*p)?.into_inner()),
        ("knn", [Int(n)]) => knn_orientation(*n),
        ("Q", [Int(l)]) => q_gadget(*l),
        ("univ", [Int(n), Int(k)]) => Ok(build_universal_dk(*n, *k)?.graph),
        _ => {
            let known = CONSTRUCTIONS
                .iter()
                .any(|c| c.split('(').next() == Some(name));
            if known {
                Err(err(format!("wrong arguments for {name}; forms: {}", CONSTRUCTIONS.join(" "))))
            } else {
                Err(err(format!("unknown construction {name:?}")))
            }
        }
    }
}

/// Parses a construction expression, a digraph6 string or an `n:HEX` tournament.
pub fn parse(input: &str) -> Result<OrientedGraph> {
    let trimmed = input.trim();
    if trimmed.starts_with('&') || trimmed.starts_with(">>digraph6<<") {
        return from_digraph6(trimmed);
    }
    if let Some((n, payload)) = trimmed.split_once(':') {
        if n.bytes().all(|c| c.is_ascii_digit()) && payload.bytes().all(|c| c.is_ascii_hexdigit()) {
            return Ok(from_hex(trimmed)?.into_inner());
        }
    }
    let compact: Vec<u8> = trimmed.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
    let mut p = Parser { s: &compact, pos: 0 };
    let g = p.expr()?;
    if p.pos != compact.len() {
        return Err(err(format!("trailing input at offset {}", p.pos)));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::format::{to_digraph6, to_hex};
    use crate::graph::Tournament;

    #[test]
    fn named_constructions() {
        assert_eq!(parse("TT(3)").unwrap(), transitive_tournament(3).unwrap().into_inner());
        assert_eq!(parse(" PP( 5 , 2 ) ").unwrap(), power_path(5, 2).unwrap());
        assert_eq!(parse("comp(P(2),C(3))").unwrap().order(), 6);
        assert_eq!(parse("blow(C(3),[2,1,1])").unwrap().arc_count(), 5);
        assert_eq!(parse("join(C(3),TT(1))").unwrap().order(), 4);
        assert_eq!(parse("Q(4)").unwrap().order(), 18);
        assert_eq!(parse("univ(3,2)").unwrap().order(), 4);
        assert_eq!(parse("rev(P(3))").unwrap(), directed_path(3).unwrap().reverse());
        for name in ["tildeT7", "Ta", "Tb", "Tc", "Td", "Te", "rot11", "QR(7)", "CC(5,2)"] {
            assert!(parse(name).unwrap().is_tournament(), "{name}");
        }
    }

    #[test]
    fn encoded_inputs() {
        assert_eq!(parse("3:e0").unwrap(), transitive_tournament(3).unwrap().into_inner());
        assert_eq!(parse("&AO").unwrap(), directed_path(2).unwrap());
    }

    #[test]
    fn rejections() {
        for bad in ["", "XYZ(3)", "TT", "TT(3", "TT(3))", "P(a)", "comp(P(2))", "blow(C(3),[1,2])", "TT(-1)"] {
            assert!(parse(bad).is_err(), "{bad:?}");
        }
        assert!(matches!(parse("Foo").unwrap_err(), Error::Parse(m) if m.contains("unknown")));
    }

    #[test]
    fn round_trips_through_encodings() {
        for e in ["P(4)", "comp(C(3),C(3))", "knn(3)", "B(2,3)", "sub(TT(3),3)", "Q(3)", "I(4)"] {
            let g = parse(e).unwrap();
            assert!(are_isomorphic(&parse(&to_digraph6(&g)).unwrap(), &g).unwrap(), "{e}");
            if let Ok(t) = Tournament::try_from(g.clone()) {
                assert_eq!(parse(&to_hex(&t)).unwrap(), g);
            }
        }
    }
}
