//! A small expression language for naming graphs.
//!
//! ```text
//! spec   := INT '*' spec | atom
//! atom   := FAMILY '(' INT ')'
//!         | 'union' '(' spec ',' spec ')'
//!         | 'corona' '(' spec ',' spec ')'
//!         | '(' spec ')'
//!         | '@' PATH
//! FAMILY := 'C' | 'K' | 'P' | 'Star' | 'Empty'
//! ```
//!
//! `Star(m)` is `K_{1,m}` with center 0. `m*G` is `m` disjoint copies of `G`.
//! `@PATH` reads a graph6 or edge-list file; the path runs to the next `,`,
//! `)` or whitespace. Whitespace between tokens is ignored.

use std::fmt;
use std::path::PathBuf;

use super::{read_graph_file, Graph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Star(usize),
    Empty(usize),
    Union(Box<GraphSpec>, Box<GraphSpec>),
    Copies(usize, Box<GraphSpec>),
    Corona(Box<GraphSpec>, Box<GraphSpec>),
    File(PathBuf),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Cycle(n) => Graph::cycle(*n),
            GraphSpec::Complete(n) => Graph::complete(*n),
            GraphSpec::Path(n) => Graph::path(*n),
            GraphSpec::Star(m) => Graph::star(*m),
            GraphSpec::Empty(n) => Graph::empty(*n),
            GraphSpec::Union(a, b) => a.build()?.disjoint_union(&b.build()?),
            GraphSpec::Copies(m, a) => a.build()?.copies(*m),
            GraphSpec::Corona(a, b) => a.build()?.corona_uniform(&b.build()?),
            GraphSpec::File(path) => read_graph_file(path),
        }
    }
}

impl std::str::FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle(n) => write!(f, "C({n})"),
            GraphSpec::Complete(n) => write!(f, "K({n})"),
            GraphSpec::Path(n) => write!(f, "P({n})"),
            GraphSpec::Star(n) => write!(f, "Star({n})"),
            GraphSpec::Empty(n) => write!(f, "Empty({n})"),
            GraphSpec::Union(a, b) => write!(f, "union({a},{b})"),
            GraphSpec::Copies(m, a) => write!(f, "{m}*({a})"),
            GraphSpec::Corona(a, b) => write!(f, "corona({a},{b})"),
            GraphSpec::File(p) => write!(f, "@{}", p.display()),
        }
    }
}

/// Parses and builds a graph in one step.
pub fn parse_graph_spec(s: &str) -> Result<Graph> {
    s.parse::<GraphSpec>()?.build()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Spec {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Spec {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let m = self.int()?;
                self.expect(b'*')?;
                Ok(GraphSpec::Copies(m, Box::new(self.spec()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.spec()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'@') => {
                self.pos += 1;
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| !c.is_ascii_whitespace() && *c != b',' && *c != b')')
                {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.error("expected a file path after '@'"));
                }
                let path = std::str::from_utf8(&self.src[start..self.pos])
                    .map_err(|_| self.error("path is not UTF-8"))?;
                Ok(GraphSpec::File(PathBuf::from(path)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().to_owned();
                self.expect(b'(')?;
                let spec = match name.as_str() {
                    "union" | "corona" => {
                        let a = Box::new(self.spec()?);
                        self.expect(b',')?;
                        let b = Box::new(self.spec()?);
                        if name == "union" {
                            GraphSpec::Union(a, b)
                        } else {
                            GraphSpec::Corona(a, b)
                        }
                    }
                    family => {
                        let n = self.int()?;
                        match family {
                            "C" => GraphSpec::Cycle(n),
                            "K" => GraphSpec::Complete(n),
                            "P" => GraphSpec::Path(n),
                            "Star" => GraphSpec::Star(n),
                            "Empty" => GraphSpec::Empty(n),
                            other => {
                                return Err(Error::Spec {
                                    pos: start,
                                    msg: format!("unknown graph family {other:?}"),
                                })
                            }
                        }
                    }
                };
                self.expect(b')')?;
                Ok(spec)
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_expressions() {
        let spec: GraphSpec = "corona( Star(3), K(2) )".parse().unwrap();
        assert_eq!(
            spec,
            GraphSpec::Corona(
                Box::new(GraphSpec::Star(3)),
                Box::new(GraphSpec::Complete(2))
            )
        );
        assert_eq!(spec.build().unwrap().order(), 12);

        let g = parse_graph_spec("union(K(3),K(1))").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);

        let g = parse_graph_spec("3*K(2)").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 3);

        let g = parse_graph_spec("union(C(5), 2*(K(2)))").unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(parse_graph_spec("Empty(0)").unwrap().order(), 0);
    }

    #[test]
    fn display_round_trips() {
        for s in ["corona(P(3),K(2))", "union(C(5),2*(K(2)))", "Empty(4)"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<GraphSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "",
            "C(",
            "C(3",
            "X(3)",
            "C(3))",
            "union(C(3))",
            "K(3) K(2)",
            "3*",
            "@",
        ] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad:?} parsed");
        }
        assert!(matches!(
            parse_graph_spec("C(2)"),
            Err(Error::Arity { family: "C", .. })
        ));
        assert!(parse_graph_spec("K(0)").is_err());
        assert!(parse_graph_spec("P(0)").is_err());
        assert!(parse_graph_spec("K(65)").is_err());
        assert!(parse_graph_spec("corona(K(8),K(8))").is_err());
    }

    #[test]
    fn reads_files() {
        let dir = std::env::temp_dir().join(format!("indpoly-spec-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let g6 = dir.join("c5.g6");
        std::fs::write(&g6, "Dhc\n").unwrap();
        let el = dir.join("p3.txt");
        std::fs::write(&el, "3\n0 1\n1 2\n").unwrap();
        let spec = format!("union(@{}, @{})", g6.display(), el.display());
        let g = parse_graph_spec(&spec).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.edge_count(), 7);
        std::fs::remove_dir_all(dir).unwrap();
    }
}
