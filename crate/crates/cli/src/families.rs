//! Named families such as `chain4:7`, `Dt:5` or `racg-cycle:6`.

use coxeter_rh::racg::SimpleGraph;
use coxeter_rh::{chain4, DiagramType};

use crate::input::InputDocument;
use crate::CliError;

/// Resolves a family token. `n` is appended as `:n` when given separately.
///
/// Malformed tokens are usage errors; impossible parameters such as `D3` or
/// `chain4:30` come back as library errors.
pub fn family_document(name: &str, n: Option<usize>) -> Result<InputDocument, CliError> {
    let token = match n {
        Some(_) if name.contains(':') => {
            return Err(CliError::Usage(format!("family {name:?} already carries a parameter")))
        }
        Some(n) => format!("{name}:{n}"),
        None => name.to_string(),
    };
    let (head, param) = split(&token).map_err(CliError::Usage)?;
    let need =
        |what: &str| param.ok_or_else(|| CliError::Usage(format!("family {head:?} needs {what}, as in {head}:4")));
    let diagram = |t: DiagramType| -> Result<InputDocument, CliError> {
        let m = t.canonical_matrix()?;
        Ok(InputDocument::Matrix {
            names: None,
            labels: m.rows(),
        })
    };
    use DiagramType::*;
    match head {
        "chain4" => {
            let m = chain4(need("a generator count")?)?;
            Ok(InputDocument::Matrix {
                names: None,
                labels: m.rows(),
            })
        }
        "racg-cycle" => {
            let g = SimpleGraph::cycle(need("a cycle length")?)?;
            Ok(InputDocument::Graph {
                vertices: (1..=g.vertex_count()).map(|i| format!("v{i}")).collect(),
                edges: g.edges(),
            })
        }
        "A" => diagram(A(need("a rank")?)),
        "B" => diagram(B(need("a rank")?)),
        "D" => diagram(D(need("a rank")?)),
        "H" => diagram(H(need("a rank")?)),
        "E" => diagram(E(need("a rank")?)),
        "F" if param == Some(4) => diagram(F4),
        "G" if param == Some(2) => diagram(G2),
        "I2" => {
            let m = need("an order")?;
            let t = match m {
                3 => A(2),
                4 => B(2),
                6 => G2,
                m => I2(u32::try_from(m).map_err(|_| CliError::Usage(format!("order {m} too large")))?),
            };
            diagram(t)
        }
        "At" => diagram(AffineA(need("a rank")?)),
        "Bt" => diagram(AffineB(need("a rank")?)),
        "Ct" => diagram(AffineC(need("a rank")?)),
        "Dt" => diagram(AffineD(need("a rank")?)),
        "Et" => diagram(AffineE(need("a rank")?)),
        "Ft" if param == Some(4) => diagram(AffineF4),
        "Gt" if param == Some(2) => diagram(AffineG2),
        _ => Err(CliError::Usage(format!("unknown family {token:?}"))),
    }
}

/// `X:n` or `Xn`; `chain4`, `racg-cycle` and `I2` always take the colon form.
fn split(token: &str) -> Result<(&str, Option<usize>), String> {
    let number = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| format!("bad parameter {s:?} in family {token:?}"))
    };
    if let Some((head, tail)) = token.split_once(':') {
        return Ok((head, Some(number(tail)?)));
    }
    if matches!(token, "chain4" | "racg-cycle" | "I2") {
        return Ok((token, None));
    }
    let cut = token.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (head, tail) = token.split_at(cut);
    if tail.is_empty() {
        Ok((head, None))
    } else {
        Ok((head, Some(number(tail)?)))
    }
}

/// True when `token` names a family rather than a generator count.
pub fn looks_like_family(token: &str) -> bool {
    token.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
}
