use serde::{Deserialize, Serialize};

use super::{ComplexError, SimplicialComplex, VertexSet};

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    m: usize,
    maximal_faces: Vec<Vec<usize>>,
}

fn from_lists(m: usize, lists: &[Vec<usize>]) -> Result<SimplicialComplex, ComplexError> {
    let mut faces = Vec::with_capacity(lists.len());
    for l in lists {
        let mut s = VertexSet::EMPTY;
        for &v in l {
            if v == 0 || v > m {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            s = s.with(v - 1);
        }
        faces.push(s);
    }
    SimplicialComplex::from_maximal_faces(m, faces)
}

/// Parses `{"m": 3, "maximal_faces": [[1, 2], [2, 3]]}` (1-based vertices).
pub fn parse_json(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let f: ComplexFile =
        serde_json::from_str(text).map_err(|e| ComplexError::Parse(e.to_string()))?;
    if f.m > super::MAX_VERTICES {
        return Err(ComplexError::TooManyVertices(f.m));
    }
    from_lists(f.m, &f.maximal_faces)
}

/// Parses one maximal face per line, whitespace-separated 1-based vertices,
/// `#` starting a comment. The vertex count is the largest label seen.
pub fn parse_text(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let mut lists = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let face = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| ComplexError::Parse(format!("line {}: bad vertex {t:?}", n + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        lists.push(face);
    }
    let m = lists.iter().flatten().copied().max().unwrap_or(0);
    if m > super::MAX_VERTICES {
        return Err(ComplexError::TooManyVertices(m));
    }
    from_lists(m, &lists)
}

pub fn to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexFile {
        m: k.m(),
        maximal_faces: k.facet_lists(),
    })
    .expect("serializable")
}

/// One maximal face per line, the format read by [`parse_text`].
pub fn to_text(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in k.facet_lists() {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn json_roundtrip() {
        let k = rp2_minimal();
        assert_eq!(parse_json(&to_json(&k)).unwrap(), k);
        assert!(parse_json(r#"{"m": 2, "maximal_faces": [[1, 3]]}"#).is_err());
        assert!(parse_json("{").is_err());
    }

    #[test]
    fn text_with_comments() {
        let k = parse_text("# triangle boundary\n1 2\n2 3 # edge\n\n1 3\n").unwrap();
        assert_eq!(k, cycle(3));
        assert!(parse_text("1 x\n").is_err());
        assert_eq!(parse_text("1\n2\n").unwrap(), disjoint_points(2));
        assert_eq!(parse_text(&to_text(&rp2_minimal())).unwrap(), rp2_minimal());
    }
}
