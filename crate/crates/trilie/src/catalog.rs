//! Built-in catalog of worked examples.
//!
//! Every entry is a JSON document in the schema of [`crate::files`] and can
//! be referred to by name anywhere a file path is accepted.  The centerpiece
//! is the 4-dimensional algebra with `[e2, e3, e4] = e1` together with its
//! adjoint action, the projection operator onto `span{e3, e4}` (a weighted
//! operator for every weight), and the post-Lie structure that operator
//! induces at weight 1.

use crate::files::FileKind;

/// One named, self-verifying catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: FileKind,
    pub description: &'static str,
    pub json: &'static str,
}

/// All shipped entries, in display order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Finds an entry by exact name.
pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

static ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "paper-ex-4d",
        kind: FileKind::Algebra,
        description: "4-dimensional 3-Lie algebra with [e2,e3,e4] = e1",
        json: r#"{
  "dim": 4,
  "basis": ["e1", "e2", "e3", "e4"],
  "brackets": [{"args": [1, 2, 3], "value": {"0": "1"}}]
}"#,
    },
    CatalogEntry {
        name: "abelian-4",
        kind: FileKind::Algebra,
        description: "4-dimensional abelian 3-Lie algebra (zero bracket)",
        json: r#"{"dim": 4, "brackets": []}"#,
    },
    CatalogEntry {
        name: "paper-ex-4d-adjoint",
        kind: FileKind::Action,
        description: "adjoint action of paper-ex-4d on itself",
        json: r#"{
  "g": "paper-ex-4d",
  "h": "paper-ex-4d",
  "rho": [
    {"pair": [1, 2], "matrix": [["0", "0", "0", "1"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"]]},
    {"pair": [1, 3], "matrix": [["0", "0", "-1", "0"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"]]},
    {"pair": [2, 3], "matrix": [["0", "1", "0", "0"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"],
                                 ["0", "0", "0", "0"]]}
  ]
}"#,
    },
    CatalogEntry {
        name: "paper-ex-4d-projection",
        kind: FileKind::Operator,
        description: "projection onto span{e3,e4} as a weight-1 operator over the adjoint action",
        json: r#"{
  "action": "paper-ex-4d-adjoint",
  "lambda": "1",
  "matrix": [["0", "0", "0", "0"],
             ["0", "0", "0", "0"],
             ["0", "0", "1", "0"],
             ["0", "0", "0", "1"]]
}"#,
    },
    CatalogEntry {
        name: "paper-ex-4d-postlie",
        kind: FileKind::PostLie,
        description: "3-post-Lie algebra induced by the projection operator at weight 1",
        json: r#"{
  "dim": 4,
  "basis": ["e1", "e2", "e3", "e4"],
  "lie": [{"args": [1, 2, 3], "value": {"0": "1"}}],
  "tri": [{"pair": [2, 3], "arg": 1, "value": {"0": "1"}}]
}"#,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::check_action;
    use crate::files::{load_action, load_algebra, load_operator, load_post_lie};
    use crate::post_lie::{check_post_lie, post_lie_from_rb};
    use crate::rota_baxter::check_rb;

    #[test]
    fn every_entry_verifies() {
        for entry in entries() {
            match entry.kind {
                FileKind::Algebra => {
                    let a = load_algebra(entry.name).unwrap();
                    assert!(a.check_fundamental_identity().passed, "{}", entry.name);
                }
                FileKind::Action => {
                    let a = load_action(entry.name).unwrap();
                    assert!(check_action(&a).unwrap().passed, "{}", entry.name);
                }
                FileKind::Operator => {
                    let op = load_operator(entry.name).unwrap();
                    assert!(check_rb(&op).unwrap().passed, "{}", entry.name);
                }
                FileKind::PostLie => {
                    let p = load_post_lie(entry.name).unwrap();
                    assert!(check_post_lie(&p).unwrap().passed, "{}", entry.name);
                }
                FileKind::Map => unreachable!("no bare maps are shipped"),
            }
        }
    }

    #[test]
    fn lookup_finds_entries_and_rejects_unknown_names() {
        assert!(lookup("paper-ex-4d").is_some());
        assert_eq!(lookup("paper-ex-4d").unwrap().kind, FileKind::Algebra);
        assert!(lookup("nonexistent").is_none());
    }

    #[test]
    fn shipped_post_lie_structure_matches_the_transported_one() {
        let op = load_operator("paper-ex-4d-projection").unwrap();
        let transported = post_lie_from_rb(&op).unwrap();
        let shipped = load_post_lie("paper-ex-4d-postlie").unwrap();
        assert!(shipped.lie().same_structure(transported.lie()));
        for (i, j) in crate::index::pairs(4) {
            for k in 0..4 {
                assert_eq!(shipped.tri_basis(i, j, k), transported.tri_basis(i, j, k));
            }
        }
    }
}
