//! Input documents in JSON and plain-text form.
//!
//! JSON is one of
//!
//! ```text
//! {"generators": ["a", "b"], "matrix": [[1, "inf"], ["inf", 1]]}
//! {"vertices": ["p", "q", "r"], "edges": [["p", "q"], [2, 3]]}
//! {"family": "chain4", "n": 7}
//! ```
//!
//! where `0` and `"inf"` both mean infinity and edge endpoints are names or
//! 1-based indices. Text is a generator count followed by `i j m` lines
//! (1-based, `m = 0` for infinity, unlisted pairs are 2), or a single family
//! token. `#` starts a comment in text input.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use thiserror::Error;

use coxeter_rh::racg::{from_graph, to_graph, SimpleGraph};
use coxeter_rh::{CoxeterMatrix, GenSet, Order};

use crate::families::{family_document, looks_like_family};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Txt,
}

impl Format {
    /// JSON when the first non-blank byte is `{`.
    pub fn sniff(bytes: &[u8]) -> Format {
        match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'{') => Format::Json,
            _ => Format::Txt,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Matrix {
        names: Option<Vec<String>>,
        labels: Vec<Vec<Order>>,
    },
    Graph {
        vertices: Vec<String>,
        edges: Vec<(usize, usize)>,
    },
    Family {
        family: String,
        n: Option<usize>,
    },
}

/// A document turned into the objects the commands work on.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub matrix: CoxeterMatrix,
    /// Present for graph input and for right-angled matrices.
    pub graph: Option<SimpleGraph>,
}

impl InputDocument {
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        match self {
            InputDocument::Matrix { names, labels } => {
                let matrix = CoxeterMatrix::new(labels.clone(), names.clone())?;
                let graph = to_graph(&matrix);
                Ok(Resolved { matrix, graph })
            }
            InputDocument::Graph { vertices, edges } => {
                let graph = SimpleGraph::new(vertices.len(), edges, Some(vertices.clone()))?;
                let matrix = from_graph(&graph)?;
                Ok(Resolved {
                    matrix,
                    graph: Some(graph),
                })
            }
            InputDocument::Family { family, n } => family_document(family, *n)?.resolve(),
        }
    }
}

pub fn parse_input(bytes: &[u8], format: Format) -> Result<InputDocument, ParseError> {
    match format {
        Format::Json => parse_json(bytes),
        Format::Txt => parse_txt(bytes),
    }
}

fn parse_json(bytes: &[u8]) -> Result<InputDocument, ParseError> {
    serde_json::from_slice::<JsonDocument>(bytes)
        .map(|d| d.0)
        .map_err(|e| ParseError::at(e.line(), e.column(), strip_position(&e.to_string())))
}

/// serde_json appends " at line L column C"; the position lives in the fields.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

const TXT_MAX_COUNT: usize = 1024;

fn parse_txt(bytes: &[u8]) -> Result<InputDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        ParseError::at(line, column, "input is not valid UTF-8")
    })?;
    // (line number, [(column, token)])
    let mut lines = text.lines().enumerate().filter_map(|(k, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut column = 1;
        for piece in content.split(char::is_whitespace) {
            if !piece.is_empty() {
                tokens.push((column, piece));
            }
            column += piece.chars().count() + 1;
        }
        (!tokens.is_empty()).then_some((k + 1, tokens))
    });

    let Some((line, header)) = lines.next() else {
        return Err(ParseError::at(1, 1, "empty input"));
    };
    if header.len() != 1 {
        return Err(ParseError::at(
            line,
            header[1].0,
            "expected a generator count or a family name alone",
        ));
    }
    let (column, token) = header[0];
    if looks_like_family(token) {
        if let Some((line, rest)) = lines.next() {
            return Err(ParseError::at(line, rest[0].0, "nothing may follow a family name"));
        }
        // validation and capacity errors surface when the document is resolved
        if let Err(CliError::Usage(msg)) = family_document(token, None) {
            return Err(ParseError::at(line, column, msg));
        }
        return Ok(InputDocument::Family {
            family: token.to_string(),
            n: None,
        });
    }
    let n: usize = token
        .parse()
        .map_err(|_| ParseError::at(line, column, format!("bad generator count {token:?}")))?;
    // counts above the library capacity still parse and fail with a capacity error
    if n == 0 || n > TXT_MAX_COUNT {
        return Err(ParseError::at(
            line,
            column,
            format!("generator count must be between 1 and {TXT_MAX_COUNT}"),
        ));
    }

    let mut labels = vec![vec![Order::Finite(2); n]; n];
    let mut listed = vec![vec![false; n]; n];
    for (i, row) in labels.iter_mut().enumerate() {
        row[i] = Order::Finite(1);
    }
    for (line, tokens) in lines {
        if tokens.len() != 3 {
            let column = tokens.get(3).map_or(tokens[0].0, |t| t.0);
            return Err(ParseError::at(line, column, "expected three fields \"i j m\""));
        }
        let index = |(column, tok): (usize, &str)| -> Result<usize, ParseError> {
            match tok.parse::<usize>() {
                Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                _ => Err(ParseError::at(
                    line,
                    column,
                    format!("generator index {tok:?} not in 1..={n}"),
                )),
            }
        };
        let i = index(tokens[0])?;
        let j = index(tokens[1])?;
        if i == j {
            return Err(ParseError::at(line, tokens[1].0, "diagonal entries are fixed at 1"));
        }
        let (column, tok) = tokens[2];
        let label = match tok.parse::<u32>() {
            Ok(0) => Order::Infinite,
            Ok(m) if m >= 2 => Order::Finite(m),
            _ if tok == "inf" => Order::Infinite,
            _ => {
                return Err(ParseError::at(
                    line,
                    column,
                    format!("order {tok:?} must be 0, inf or at least 2"),
                ))
            }
        };
        if listed[i][j] {
            return Err(ParseError::at(
                line,
                tokens[0].0,
                format!("pair {} {} listed twice", i + 1, j + 1),
            ));
        }
        listed[i][j] = true;
        listed[j][i] = true;
        labels[i][j] = label;
        labels[j][i] = label;
    }
    Ok(InputDocument::Matrix { names: None, labels })
}

struct Label(Order);

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an order: a positive integer, 0 or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Label, E> {
                match v {
                    0 => Ok(Label(Order::Infinite)),
                    v => u32::try_from(v)
                        .map(|m| Label(Order::Finite(m)))
                        .map_err(|_| E::custom(format!("order {v} is too large"))),
                }
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Label, E> {
                u64::try_from(v)
                    .map_err(|_| E::custom(format!("order {v} is negative")))
                    .and_then(|v| self.visit_u64(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Label, E> {
                match v {
                    "inf" | "infinity" | "∞" => Ok(Label(Order::Infinite)),
                    _ => Err(E::custom(format!("unknown order {v:?}"))),
                }
            }
        }
        d.deserialize_any(V)
    }
}

struct SquareTable(Vec<Vec<Order>>);

impl<'de> Deserialize<'de> for SquareTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Label>>::deserialize(d)?;
        let n = rows.len();
        if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(de::Error::custom(format!(
                "matrix is not square: row {} has {} entries, expected {n}",
                r + 1,
                row.len()
            )));
        }
        Ok(SquareTable(
            rows.into_iter()
                .map(|row| row.into_iter().map(|l| l.0).collect())
                .collect(),
        ))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Vertices {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    generators: Option<Vec<String>>,
    matrix: Option<SquareTable>,
    vertices: Option<Vertices>,
    edges: Option<Vec<(VertexRef, VertexRef)>>,
    family: Option<String>,
    n: Option<usize>,
}

struct JsonDocument(InputDocument);

/// Checks run inside the map visitor so that serde_json attaches a position.
impl<'de> Deserialize<'de> for JsonDocument {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonDocument;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an input document object")
            }
            fn visit_map<A: de::MapAccess<'de>>(self, map: A) -> Result<JsonDocument, A::Error> {
                let raw = RawDocument::deserialize(de::value::MapAccessDeserializer::new(map))?;
                document_from_raw(raw).map(JsonDocument).map_err(de::Error::custom)
            }
        }
        d.deserialize_map(V)
    }
}

fn document_from_raw(raw: RawDocument) -> Result<InputDocument, String> {
    let forms = [
        raw.matrix.is_some() || raw.generators.is_some(),
        raw.vertices.is_some() || raw.edges.is_some(),
        raw.family.is_some() || raw.n.is_some(),
    ];
    if forms.iter().filter(|&&f| f).count() != 1 {
        return Err("expected exactly one of a matrix, a graph or a family".into());
    }
    if let Some(SquareTable(labels)) = raw.matrix {
        return Ok(InputDocument::Matrix {
            names: raw.generators,
            labels,
        });
    }
    if raw.generators.is_some() {
        return Err("generators given without a matrix".into());
    }
    if let Some(family) = raw.family {
        return Ok(InputDocument::Family { family, n: raw.n });
    }
    if raw.n.is_some() {
        return Err("n given without a family".into());
    }
    let vertices = match raw.vertices {
        Some(Vertices::Names(v)) => v,
        Some(Vertices::Count(k)) => (1..=k).map(|i| format!("v{i}")).collect(),
        None => return Err("edges given without vertices".into()),
    };
    let lookup = |v: &VertexRef| -> Result<usize, String> {
        match v {
            VertexRef::Index(i) if (1..=vertices.len()).contains(i) => Ok(i - 1),
            VertexRef::Index(i) => Err(format!("vertex index {i} not in 1..={}", vertices.len())),
            VertexRef::Name(s) => vertices
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| format!("unknown vertex {s:?}")),
        }
    };
    let edges = raw
        .edges
        .unwrap_or_default()
        .iter()
        .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
        .collect::<Result<Vec<_>, String>>()?;
    Ok(InputDocument::Graph { vertices, edges })
}

/// A generator given by name, or by 1-based index when no name matches.
pub fn generator(m: &CoxeterMatrix, token: &str) -> Result<usize, CliError> {
    let token = token.trim();
    if let Some(i) = m.index_of(token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if (1..=m.n()).contains(&i) => Ok(i - 1),
        _ => Err(CliError::Usage(format!("unknown generator {token:?}"))),
    }
}

/// Comma-separated generators; the empty string is the empty set.
pub fn parse_subset(m: &CoxeterMatrix, text: &str) -> Result<GenSet, CliError> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| generator(m, t))
        .collect()
}

/// A JSON list of generator lists, e.g. `[["s1","s2"],["s3"]]`.
pub fn parse_types(m: &CoxeterMatrix, text: &str) -> Result<Vec<GenSet>, CliError> {
    let lists: Vec<Vec<VertexRef>> =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("--types: {e}")))?;
    lists
        .iter()
        .map(|list| {
            list.iter()
                .map(|v| match v {
                    VertexRef::Name(s) => generator(m, s),
                    VertexRef::Index(i) if (1..=m.n()).contains(i) => Ok(i - 1),
                    VertexRef::Index(i) => Err(CliError::Usage(format!("generator index {i} out of range"))),
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(s: &str) -> Result<InputDocument, ParseError> {
        parse_input(s.as_bytes(), Format::Json)
    }

    fn txt(s: &str) -> Result<InputDocument, ParseError> {
        parse_input(s.as_bytes(), Format::Txt)
    }

    #[test]
    fn txt_dihedral() {
        let d = txt("2\n1 2 0\n").unwrap();
        let m = d.resolve().unwrap().matrix;
        assert_eq!(m.order(0, 1), Order::Infinite);
    }

    #[test]
    fn txt_family_and_comments() {
        let d = txt("# path with every label 4\nchain4:7\n").unwrap();
        assert_eq!(d.resolve().unwrap().matrix, coxeter_rh::chain4(7).unwrap());
        let d = txt("3 # three generators\n\n1 2 3\n2 3 inf\n").unwrap();
        let m = d.resolve().unwrap().matrix;
        assert_eq!(m.order(0, 1), Order::Finite(3));
        assert_eq!(m.order(2, 1), Order::Infinite);
        assert_eq!(m.order(0, 2), Order::Finite(2));
    }

    #[test]
    fn txt_errors_have_positions() {
        let e = txt("3\n1 4 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = txt("3\n1 2 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = txt("3\n1 2 3\n2 1 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = txt("3\n1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(txt("").unwrap_err().line, 1);
        let e = txt("chain4:7\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(txt("x7\n").unwrap_err().column, 1);
    }

    #[test]
    fn json_matrix() {
        let d = json(r#"{"generators": ["a", "b"], "matrix": [[1, "inf"], [0, 1]]}"#).unwrap();
        let m = d.resolve().unwrap().matrix;
        assert_eq!(m.names(), ["a", "b"]);
        assert_eq!(m.order(0, 1), Order::Infinite);
    }

    #[test]
    fn json_non_square_is_a_parse_error() {
        let e = json("{\"matrix\": [[1, 2],\n [2]]}").unwrap_err();
        assert!(e.message.contains("not square"), "{e}");
        assert_eq!(e.line, 2);
    }

    #[test]
    fn json_syntax_error_position() {
        let e = json("{\n  \"matrix\": [[1, 2], [2, 1]],,\n}").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.column > 1);
    }

    #[test]
    fn json_validation_goes_through_the_library() {
        let d = json(r#"{"matrix": [[1, 3], [4, 1]]}"#).unwrap();
        assert!(matches!(
            d.resolve(),
            Err(CliError::Library(coxeter_rh::Error::NonSymmetric { .. }))
        ));
    }

    #[test]
    fn json_graph_and_family() {
        let d = json(r#"{"vertices": ["p", "q", "r"], "edges": [["p", "q"], [2, 3]]}"#).unwrap();
        let r = d.resolve().unwrap();
        assert_eq!(r.graph.unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(r.matrix.order(0, 2), Order::Infinite);
        let d = json(r#"{"family": "chain4", "n": 7}"#).unwrap();
        assert_eq!(d.resolve().unwrap().matrix, coxeter_rh::chain4(7).unwrap());
    }

    #[test]
    fn json_form_must_be_unique() {
        let e = json("{\"family\": \"A3\",\n \"matrix\": [[1]]}").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(json(r#"{}"#).is_err());
        assert!(json(r#"{"matrix": [[1]], "colour": 1}"#).is_err());
        assert!(json(r#"{"edges": []}"#).is_err());
        assert!(json(r#"{"matrix": [[1, -3], [-3, 1]]}"#).is_err());
    }

    #[test]
    fn subsets_and_types() {
        let m = coxeter_rh::chain4(7).unwrap();
        assert_eq!(parse_subset(&m, "s2,s3, 4").unwrap(), GenSet::from_one_based([2, 3, 4]));
        assert_eq!(parse_subset(&m, "").unwrap(), GenSet::EMPTY);
        assert!(parse_subset(&m, "s9").is_err());
        let t = parse_types(&m, r#"[["s2","s3","s4"],[3,4,5]]"#).unwrap();
        assert_eq!(
            t,
            vec![GenSet::from_one_based([2, 3, 4]), GenSet::from_one_based([3, 4, 5])]
        );
        assert!(parse_types(&m, "[[").is_err());
    }
}
