//! JSON file formats and the path-or-name loader.
//!
//! Every object the command line consumes has a JSON schema built from the
//! same few conventions: 0-based indices, strictly increasing index tuples,
//! omitted entries meaning zero, and rationals written as reduced `"p/q"`
//! (or `"p"`) strings.  Wherever a schema embeds an algebra or an action,
//! either an inline object or a string name is accepted; names resolve first
//! against the directory in `TRILIE_CATALOG_DIR` (as `<name>.json`), then
//! against the built-in catalog.  A loader argument that is an existing file
//! path is read directly.
//!
//! Schemas:
//!
//! ```text
//! algebra   {"dim": n, "basis": ["e1", ...]?, "brackets": [{"args": [i,j,k], "value": {"t": "p/q", ...}}]}
//! action    {"g": <algebra or name>, "h": <algebra or name>, "rho": [{"pair": [i,j], "matrix": [["p/q", ...], ...]}]}
//! operator  {"action": <action or name>, "lambda": "p/q", "matrix": [[...]]}
//! postlie   {"dim": n, "lie": [<bracket entries>], "tri": [{"pair": [i,j], "arg": k, "value": {"t": "p/q", ...}}]}
//! map       {"matrix": [[...]]}
//! ```
//!
//! Matrices are rows-by-columns over the target and source bases, so an
//! operator matrix for `T: h -> g` has `dim g` rows and `dim h` columns.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::{ActionData, PairMap};
use crate::algebra::{LinearMap, ThreeLieAlgebra};
use crate::catalog;
use crate::error::{Error, Result};
use crate::index::{pair_index, pairs, triples};
use crate::linalg::{rat_string, zero_vec, Matrix, Rat};
use crate::post_lie::ThreePostLie;
use crate::rota_baxter::RBOperator;

/// Parses a `"p/q"` or `"p"` literal into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Input(format!("bad rational literal {s:?}: {e}")))
}

fn parse_matrix(rows: &[Vec<String>], what: &str) -> Result<Matrix> {
    if rows.is_empty() {
        return Err(Error::Input(format!("{what}: empty matrix")));
    }
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != rows[0].len() {
            return Err(Error::Input(format!("{what}: ragged matrix rows")));
        }
        out.push(
            row.iter()
                .map(|s| parse_rat(s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Matrix::from_rows(out)
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rat_string(m.get(i, j))).collect())
        .collect()
}

/// Parses a `{"target-index": "p/q"}` map into a coefficient vector.
fn parse_value_map(value: &BTreeMap<String, String>, dim: usize, what: &str) -> Result<Vec<Rat>> {
    let mut out = zero_vec(dim);
    for (key, lit) in value {
        let t: usize = key
            .parse()
            .map_err(|_| Error::Input(format!("{what}: bad target index {key:?}")))?;
        if t >= dim {
            return Err(Error::Input(format!(
                "{what}: target index {t} out of range for dimension {dim}"
            )));
        }
        out[t] = parse_rat(lit)?;
    }
    Ok(out)
}

fn value_map(v: &[Rat]) -> BTreeMap<String, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !num::Zero::is_zero(*c))
        .map(|(t, c)| (t.to_string(), rat_string(c)))
        .collect()
}

/// One ternary bracket `[e_i, e_j, e_k] = sum_t value[t] e_t` with `i<j<k`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub args: [usize; 3],
    pub value: BTreeMap<String, String>,
}

/// JSON schema of a 3-Lie algebra given by structure constants.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

/// An inline object or the name of a catalog entry.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NameOr<T> {
    Name(String),
    Inline(T),
}

/// JSON schema of an action `rho` of `g` on `h`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ActionFile {
    pub g: NameOr<AlgebraFile>,
    pub h: NameOr<AlgebraFile>,
    #[serde(default)]
    pub rho: Vec<RhoEntry>,
}

/// The matrix of `rho(e_i, e_j)` for one pair `i<j`; omitted pairs are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RhoEntry {
    pub pair: [usize; 2],
    pub matrix: Vec<Vec<String>>,
}

/// JSON schema of a weighted operator `T: h -> g` over an action.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OperatorFile {
    pub action: NameOr<ActionFile>,
    pub lambda: String,
    pub matrix: Vec<Vec<String>>,
}

/// One ternary product `{e_i, e_j, e_k} = sum_t value[t] e_t` with `i<j`
/// (the third slot carries no symmetry).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TriEntry {
    pub pair: [usize; 2],
    pub arg: usize,
    pub value: BTreeMap<String, String>,
}

/// JSON schema of a 3-post-Lie algebra: an underlying bracket table plus the
/// ternary product.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PostLieFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub lie: Vec<BracketEntry>,
    #[serde(default)]
    pub tri: Vec<TriEntry>,
}

/// JSON schema of a bare linear map (e.g. a deformation direction).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub matrix: Vec<Vec<String>>,
}

/// The object kinds the loader understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Algebra,
    Action,
    Operator,
    PostLie,
    Map,
}

impl FileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FileKind::Algebra => "algebra",
            FileKind::Action => "action",
            FileKind::Operator => "operator",
            FileKind::PostLie => "postlie",
            FileKind::Map => "map",
        }
    }
}

impl FromStr for FileKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(FileKind::Algebra),
            "action" => Ok(FileKind::Action),
            "operator" => Ok(FileKind::Operator),
            "postlie" => Ok(FileKind::PostLie),
            "map" => Ok(FileKind::Map),
            other => Err(Error::Input(format!(
                "unknown kind {other:?} (expected algebra | action | operator | postlie | map)"
            ))),
        }
    }
}

/// Resolves a path-or-name to JSON text: an existing file path is read
/// directly; otherwise the name is tried as `<name>.json` under
/// `TRILIE_CATALOG_DIR`, then in the built-in catalog.
pub fn resolve_source(spec: &str, kind: FileKind) -> Result<String> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(std::fs::read_to_string(path)?);
    }
    if let Ok(dir) = std::env::var("TRILIE_CATALOG_DIR") {
        let candidate = Path::new(&dir).join(format!("{spec}.json"));
        if candidate.is_file() {
            return Ok(std::fs::read_to_string(candidate)?);
        }
    }
    if let Some(entry) = catalog::lookup(spec) {
        if entry.kind != kind {
            return Err(Error::Input(format!(
                "catalog entry {spec:?} is a {}, not a {}",
                entry.kind.as_str(),
                kind.as_str()
            )));
        }
        return Ok(entry.json.to_string());
    }
    Err(Error::Input(format!(
        "{spec:?} is neither a readable file nor a known {} name",
        kind.as_str()
    )))
}

/// Builds the domain algebra from its file form.
pub fn algebra_from_file(file: &AlgebraFile) -> Result<ThreeLieAlgebra> {
    let mut entries = Vec::with_capacity(file.brackets.len());
    for b in &file.brackets {
        let [i, j, k] = b.args;
        if !(i < j && j < k) {
            return Err(Error::Input(format!(
                "bracket args [{i},{j},{k}] must be strictly increasing"
            )));
        }
        let v = parse_value_map(&b.value, file.dim, "bracket value")?;
        let terms: Vec<(usize, Rat)> = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !num::Zero::is_zero(c))
            .collect();
        entries.push(((i, j, k), terms));
    }
    let algebra = ThreeLieAlgebra::from_brackets(file.dim, &entries)?;
    match &file.basis {
        Some(names) => algebra.with_names(names.clone()),
        None => Ok(algebra),
    }
}

/// Renders an algebra back into its file form (only nonzero brackets).
pub fn algebra_to_file(a: &ThreeLieAlgebra) -> AlgebraFile {
    let brackets = triples(a.dim())
        .filter_map(|(i, j, k)| {
            let v = a.bracket_basis(i, j, k);
            let value = value_map(&v);
            if value.is_empty() {
                None
            } else {
                Some(BracketEntry {
                    args: [i, j, k],
                    value,
                })
            }
        })
        .collect();
    AlgebraFile {
        dim: a.dim(),
        basis: Some(a.basis_names().to_vec()),
        brackets,
    }
}

fn resolve_algebra(r: &NameOr<AlgebraFile>) -> Result<ThreeLieAlgebra> {
    match r {
        NameOr::Name(n) => load_algebra(n),
        NameOr::Inline(f) => algebra_from_file(f),
    }
}

/// Builds the domain action from its file form.
pub fn action_from_file(file: &ActionFile) -> Result<ActionData> {
    let g = resolve_algebra(&file.g)?;
    let h = resolve_algebra(&file.h)?;
    let mut mats = vec![Matrix::zeros(h.dim(), h.dim()); crate::index::pair_count(g.dim())];
    for entry in &file.rho {
        let [i, j] = entry.pair;
        if i >= j || j >= g.dim() {
            return Err(Error::Input(format!(
                "action pair [{i},{j}] must be strictly increasing and within dimension {}",
                g.dim()
            )));
        }
        let m = parse_matrix(&entry.matrix, "action matrix")?;
        if m.rows() != h.dim() || m.cols() != h.dim() {
            return Err(Error::Dim(format!(
                "action matrix for pair [{i},{j}] must be {0} x {0}",
                h.dim()
            )));
        }
        mats[pair_index(g.dim(), i, j)] = m;
    }
    let rho = PairMap::new(g.dim(), h.dim(), mats)?;
    ActionData::new(g, h, rho)
}

/// Builds the domain operator from its file form.
pub fn operator_from_file(file: &OperatorFile) -> Result<RBOperator> {
    let action = match &file.action {
        NameOr::Name(n) => load_action(n)?,
        NameOr::Inline(f) => action_from_file(f)?,
    };
    let lambda = parse_rat(&file.lambda)?;
    let m = parse_matrix(&file.matrix, "operator matrix")?;
    RBOperator::new(action, LinearMap::new(m), lambda)
}

/// Builds the domain post-Lie structure from its file form.
pub fn post_lie_from_file(file: &PostLieFile) -> Result<ThreePostLie> {
    let lie = algebra_from_file(&AlgebraFile {
        dim: file.dim,
        basis: file.basis.clone(),
        brackets: file.lie.clone(),
    })?;
    let mut tri = vec![vec![zero_vec(file.dim); file.dim]; crate::index::pair_count(file.dim)];
    for entry in &file.tri {
        let [i, j] = entry.pair;
        if i >= j || j >= file.dim || entry.arg >= file.dim {
            return Err(Error::Input(format!(
                "ternary product entry ([{i},{j}], {}) out of range",
                entry.arg
            )));
        }
        tri[pair_index(file.dim, i, j)][entry.arg] =
            parse_value_map(&entry.value, file.dim, "ternary product value")?;
    }
    ThreePostLie::new(lie, tri)
}

/// Renders a post-Lie structure back into its file form.
pub fn post_lie_to_file(p: &ThreePostLie) -> PostLieFile {
    let lie_file = algebra_to_file(p.lie());
    let mut tri = Vec::new();
    for (i, j) in pairs(p.dim()) {
        for k in 0..p.dim() {
            let value = value_map(&p.tri_basis(i, j, k));
            if !value.is_empty() {
                tri.push(TriEntry {
                    pair: [i, j],
                    arg: k,
                    value,
                });
            }
        }
    }
    PostLieFile {
        dim: p.dim(),
        basis: lie_file.basis,
        lie: lie_file.brackets,
        tri,
    }
}

/// Loads an algebra from a path or catalog name.
pub fn load_algebra(spec: &str) -> Result<ThreeLieAlgebra> {
    let text = resolve_source(spec, FileKind::Algebra)?;
    algebra_from_file(&serde_json::from_str(&text)?)
}

/// Loads an action from a path or catalog name.
pub fn load_action(spec: &str) -> Result<ActionData> {
    let text = resolve_source(spec, FileKind::Action)?;
    action_from_file(&serde_json::from_str(&text)?)
}

/// Loads an operator from a path or catalog name.
pub fn load_operator(spec: &str) -> Result<RBOperator> {
    let text = resolve_source(spec, FileKind::Operator)?;
    operator_from_file(&serde_json::from_str(&text)?)
}

/// Loads a post-Lie structure from a path or catalog name.
pub fn load_post_lie(spec: &str) -> Result<ThreePostLie> {
    let text = resolve_source(spec, FileKind::PostLie)?;
    post_lie_from_file(&serde_json::from_str(&text)?)
}

/// Loads a bare linear map from a path or catalog name.
pub fn load_map(spec: &str) -> Result<LinearMap> {
    let text = resolve_source(spec, FileKind::Map)?;
    let file: MapFile = serde_json::from_str(&text)?;
    Ok(LinearMap::new(parse_matrix(&file.matrix, "map matrix")?))
}

/// Serializes a linear map into its file form.
pub fn map_to_file(m: &LinearMap) -> MapFile {
    MapFile {
        matrix: matrix_strings(m.matrix()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rint;

    #[test]
    fn rational_literals_round_trip() {
        assert_eq!(parse_rat("3/4").unwrap(), crate::linalg::rat(3, 4));
        assert_eq!(parse_rat("-2").unwrap(), rint(-2));
        assert_eq!(parse_rat(" 6/4 ").unwrap(), crate::linalg::rat(3, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(rat_string(&crate::linalg::rat(-3, 6)), "-1/2");
    }

    #[test]
    fn algebra_files_parse_and_round_trip() {
        let text = r#"{"dim": 4, "basis": ["e1","e2","e3","e4"],
                       "brackets": [{"args": [1,2,3], "value": {"0": "1"}}]}"#;
        let file: AlgebraFile = serde_json::from_str(text).unwrap();
        let a = algebra_from_file(&file).unwrap();
        assert_eq!(
            a.bracket_basis(1, 2, 3),
            vec![rint(1), rint(0), rint(0), rint(0)]
        );
        assert!(a.check_fundamental_identity().passed);
        let back = algebra_to_file(&a);
        let reparsed = algebra_from_file(&back).unwrap();
        assert!(a.same_structure(&reparsed));
        // Empty bracket list is the abelian algebra.
        let empty: AlgebraFile = serde_json::from_str(r#"{"dim": 3}"#).unwrap();
        let b = algebra_from_file(&empty).unwrap();
        assert!(b.same_structure(&ThreeLieAlgebra::abelian(3)));
    }

    #[test]
    fn algebra_files_reject_bad_entries() {
        let unsorted = AlgebraFile {
            dim: 3,
            basis: None,
            brackets: vec![BracketEntry {
                args: [2, 1, 0],
                value: BTreeMap::new(),
            }],
        };
        assert!(matches!(algebra_from_file(&unsorted), Err(Error::Input(_))));
        let out_of_range: AlgebraFile = serde_json::from_str(
            r#"{"dim": 3, "brackets": [{"args": [0,1,2], "value": {"7": "1"}}]}"#,
        )
        .unwrap();
        assert!(matches!(
            algebra_from_file(&out_of_range),
            Err(Error::Input(_))
        ));
        let bad_literal: AlgebraFile = serde_json::from_str(
            r#"{"dim": 3, "brackets": [{"args": [0,1,2], "value": {"0": "one"}}]}"#,
        )
        .unwrap();
        assert!(matches!(
            algebra_from_file(&bad_literal),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn action_files_support_inline_and_named_algebras() {
        let text = r#"{
            "g": {"dim": 2},
            "h": {"dim": 2},
            "rho": [{"pair": [0,1], "matrix": [["1","0"],["0","1/2"]]}]
        }"#;
        let file: ActionFile = serde_json::from_str(text).unwrap();
        let action = action_from_file(&file).unwrap();
        assert_eq!(action.rho.mat(0, 1).get(1, 1), &crate::linalg::rat(1, 2));
        let named = r#"{"g": "paper-ex-4d", "h": "paper-ex-4d", "rho": []}"#;
        let file: ActionFile = serde_json::from_str(named).unwrap();
        let action = action_from_file(&file).unwrap();
        assert_eq!(action.g.dim(), 4);
        assert!(action.g.check_fundamental_identity().passed);
    }

    #[test]
    fn operator_and_map_files_parse() {
        let text = r#"{
            "action": "paper-ex-4d-adjoint",
            "lambda": "1",
            "matrix": [["0","0","0","0"],["0","0","0","0"],["0","0","1","0"],["0","0","0","1"]]
        }"#;
        let file: OperatorFile = serde_json::from_str(text).unwrap();
        let op = operator_from_file(&file).unwrap();
        assert!(crate::rota_baxter::check_rb(&op).unwrap().passed);
        let map: MapFile = serde_json::from_str(r#"{"matrix": [["1","2"],["3","4/5"]]}"#).unwrap();
        let m = LinearMap::new(parse_matrix(&map.matrix, "test").unwrap());
        assert_eq!(m.apply_basis(1), vec![rint(2), crate::linalg::rat(4, 5)]);
        let rendered = map_to_file(&m);
        assert_eq!(rendered.matrix[1][1], "4/5");
    }

    #[test]
    fn post_lie_files_round_trip() {
        let text = r#"{
            "dim": 4,
            "lie": [{"args": [1,2,3], "value": {"0": "1"}}],
            "tri": [{"pair": [2,3], "arg": 1, "value": {"0": "1"}}]
        }"#;
        let file: PostLieFile = serde_json::from_str(text).unwrap();
        let p = post_lie_from_file(&file).unwrap();
        assert!(crate::post_lie::check_post_lie(&p).unwrap().passed);
        let back = post_lie_to_file(&p);
        let reparsed = post_lie_from_file(&back).unwrap();
        assert!(p.lie().same_structure(reparsed.lie()));
        assert_eq!(p.tri_basis(2, 3, 1), reparsed.tri_basis(2, 3, 1));
        assert_eq!(back.tri.len(), 1);
    }

    #[test]
    fn loader_resolution_prefers_files_then_env_then_catalog() {
        let dir = std::env::temp_dir().join("trilie-files-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tiny.json");
        std::fs::write(&path, r#"{"dim": 2}"#).unwrap();
        let a = load_algebra(path.to_str().unwrap()).unwrap();
        assert_eq!(a.dim(), 2);
        let named = load_algebra("abelian-4").unwrap();
        assert_eq!(named.dim(), 4);
        assert!(matches!(
            load_algebra("no-such-thing"),
            Err(Error::Input(_))
        ));
        // A name of the wrong kind is refused.
        assert!(matches!(load_action("paper-ex-4d"), Err(Error::Input(_))));
        std::fs::remove_file(&path).unwrap();
    }
}
