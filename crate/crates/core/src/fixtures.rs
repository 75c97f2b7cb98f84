//! Built-in quivers and representations shared by the command line and the
//! test suites. The same objects are shipped as JSON under `fixtures/`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::cluster::{EShape, Quiver};
use crate::error::{Error, Result};
use crate::rep::{ArrowMap, DimVector, QuiverRep, RepJson};

/// The D4~ star with center 3: arrows `4 -> 3`, `5 -> 3`, `3 -> 1`, `3 -> 2`.
pub fn d4_quiver() -> Quiver {
    Quiver::from_labeled_arrows(&["1", "2", "3", "4", "5"], &[("4", "3"), ("5", "3"), ("3", "1"), ("3", "2")])
        .expect("valid fixture")
}

/// The E6~ star with arms `5 -> 4 -> 1`, `3 -> 2 -> 1`, `7 -> 6 -> 1`.
pub fn e6_quiver() -> Quiver {
    Quiver::from_labeled_arrows(
        &["1", "2", "3", "4", "5", "6", "7"],
        &[("5", "4"), ("4", "1"), ("3", "2"), ("2", "1"), ("6", "1"), ("7", "6")],
    )
    .expect("valid fixture")
}

/// Star-shaped orientation of an affine E diagram with all arrows pointing to the center `z`.
pub fn affine_e_star(arms: &[usize]) -> Quiver {
    let mut labels = vec!["z".to_string()];
    let mut arrows = Vec::new();
    for (a, &len) in arms.iter().enumerate() {
        let mut prev = 0;
        for j in 0..len {
            labels.push(format!("{}{}", (b'p' + a as u8) as char, j + 1));
            arrows.push((labels.len() - 1, prev));
            prev = labels.len() - 1;
        }
    }
    Quiver::from_arrows(&labels, &arrows).expect("valid star")
}

pub fn e7_star() -> Quiver {
    affine_e_star(&[1, 3, 3])
}

pub fn e8_star() -> Quiver {
    affine_e_star(&[1, 2, 5])
}

pub fn kronecker_quiver() -> Quiver {
    Quiver::from_arrows(&["0", "1"], &[(0, 1), (0, 1)]).expect("valid fixture")
}

/// Tube quiddities of the E6~ example; the representations themselves are not built.
pub fn e6_tube_quiddities() -> Vec<Vec<i64>> {
    vec![vec![9, 36], vec![7, 7, 7], vec![7, 7, 7]]
}

/// Representation with the listed matrices on the listed arrows and zero-shaped matrices
/// on the others. Vertices are 1-based labels of a quiver with numeric labels.
fn build(q: &Quiver, dims: &[u32], given: &[((usize, usize), Vec<Vec<i64>>)], params: &[(&str, i64)]) -> QuiverRep {
    let dims = DimVector(dims.to_vec());
    let maps = q
        .arrows()
        .into_iter()
        .map(|(t, h, _)| {
            let matrix = given
                .iter()
                .find(|((a, b), _)| (a - 1, b - 1) == (t, h))
                .map(|(_, m)| m.clone())
                .unwrap_or_else(|| vec![vec![0; dims.0[t] as usize]; dims.0[h] as usize]);
            ArrowMap { tail: t, head: h, matrix }
        })
        .collect();
    let params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>();
    QuiverRep::new(q.clone(), dims, maps, params).expect("valid fixture")
}

/// The two quasi-simples at the mouth of tube `i` (1, 2 or 3) of the D4~ star.
pub fn d4_tube(i: usize) -> Vec<QuiverRep> {
    let q = d4_quiver();
    let one = || vec![vec![1]];
    match i {
        1 => vec![
            build(&q, &[1, 1, 1, 1, 1], &[((4, 3), one()), ((5, 3), one()), ((3, 1), one()), ((3, 2), one())], &[]),
            build(&q, &[0, 0, 1, 0, 0], &[], &[]),
        ],
        2 => vec![
            build(&q, &[1, 0, 1, 0, 1], &[((5, 3), one()), ((3, 1), one())], &[]),
            build(&q, &[0, 1, 1, 1, 0], &[((4, 3), one()), ((3, 2), one())], &[]),
        ],
        3 => vec![
            build(&q, &[0, 1, 1, 0, 1], &[((5, 3), one()), ((3, 2), one())], &[]),
            build(&q, &[1, 0, 1, 1, 0], &[((4, 3), one()), ((3, 1), one())], &[]),
        ],
        _ => panic!("the D4~ star has three exceptional tubes"),
    }
}

fn m_family(lambda: i64, params: &[(&str, i64)]) -> QuiverRep {
    build(
        &d4_quiver(),
        &[1, 1, 2, 1, 1],
        &[
            ((3, 1), vec![vec![1, 1]]),
            ((3, 2), vec![vec![lambda, 1]]),
            ((4, 3), vec![vec![1], vec![0]]),
            ((5, 3), vec![vec![0], vec![1]]),
        ],
        params,
    )
}

/// The homogeneous quasi-simple `M_lambda` of dimension vector delta = (1,1,2,1,1).
pub fn m_lambda(lambda: i64) -> QuiverRep {
    m_family(lambda, &[("lambda", lambda)])
}

/// The same matrices at `lambda = 0`, where the module leaves the homogeneous tubes and
/// becomes the quasi-length 2 module on top of the simple at the center.
pub fn m_degenerate() -> QuiverRep {
    m_family(0, &[])
}

/// Regular simple of the Kronecker quiver with maps `1` and `nu`.
pub fn kronecker_regular(nu: i64) -> QuiverRep {
    let q = kronecker_quiver();
    let maps = vec![
        ArrowMap { tail: 0, head: 1, matrix: vec![vec![1]] },
        ArrowMap { tail: 0, head: 1, matrix: vec![vec![nu]] },
    ];
    QuiverRep::new(q, DimVector(vec![1, 1]), maps, BTreeMap::from([("lambda".to_string(), nu)]))
        .expect("valid fixture")
}

/// Every fixture file as `(relative path, pretty JSON)`.
pub fn fixture_files() -> Vec<(String, String)> {
    let pretty = |v: &serde_json::Value| serde_json::to_string_pretty(v).expect("serializable") + "\n";
    let quiver = |q: &Quiver| pretty(&serde_json::to_value(q.to_json(&[])).unwrap());
    let rep = |m: &QuiverRep| pretty(&serde_json::to_value(m.to_json()).unwrap());
    let tube = |ms: Vec<QuiverRep>| {
        let v: Vec<RepJson> = ms.iter().map(QuiverRep::to_json).collect();
        pretty(&serde_json::to_value(v).unwrap())
    };
    let mut out = vec![
        ("d4/quiver.json".into(), quiver(&d4_quiver())),
        ("d4/tube1.json".into(), tube(d4_tube(1))),
        ("d4/tube2.json".into(), tube(d4_tube(2))),
        ("d4/tube3.json".into(), tube(d4_tube(3))),
        ("d4/m_lambda.json".into(), rep(&m_lambda(2))),
        ("d4/m_degenerate.json".into(), rep(&m_degenerate())),
        ("e6/quiver.json".into(), quiver(&e6_quiver())),
        (
            "e6/quiddities.json".into(),
            pretty(&serde_json::json!({ "tubes": e6_tube_quiddities() })),
        ),
        ("e7/quiver.json".into(), quiver(&e7_star())),
        ("e8/quiver.json".into(), quiver(&e8_star())),
        ("kronecker/quiver.json".into(), quiver(&kronecker_quiver())),
        ("kronecker/regular.json".into(), rep(&kronecker_regular(2))),
    ];
    for (k, name) in [(1, "e6"), (2, "e7"), (3, "e8")] {
        out.push((format!("{name}/eshape.json"), quiver(&EShape::standard_quiver(k).expect("valid k"))));
    }
    out
}

/// The `fixtures/` directory of the source tree.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn write_all(dir: &Path) -> Result<()> {
    for (rel, text) in fixture_files() {
        let path = dir.join(rel);
        let io = |source| Error::Io { path: path.display().to_string(), source };
        fs::create_dir_all(path.parent().expect("relative path has a parent")).map_err(io)?;
        fs::write(&path, text).map_err(io)?;
    }
    Ok(())
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn load_quiver(path: &Path) -> Result<(Quiver, Vec<usize>)> {
    let json: crate::cluster::QuiverJson = serde_json::from_str(&read_text(path)?)?;
    Ok(json.to_quiver()?)
}

pub fn load_rep(path: &Path) -> Result<QuiverRep> {
    let json: RepJson = serde_json::from_str(&read_text(path)?)?;
    Ok(QuiverRep::from_json(&json)?)
}

/// A tube file holds a list of representations.
pub fn load_tube(path: &Path) -> Result<Vec<QuiverRep>> {
    let json: Vec<RepJson> = serde_json::from_str(&read_text(path)?)?;
    json.iter().map(|r| QuiverRep::from_json(r).map_err(Error::from)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::delta;

    #[test]
    fn shipped_files_match_definitions() {
        let dir = default_dir();
        for (rel, text) in fixture_files() {
            let on_disk = read_text(&dir.join(&rel)).unwrap_or_default();
            assert_eq!(on_disk, text, "fixtures/{rel} is out of date; regenerate with `friezelab fixtures --write`");
        }
    }

    /// Run with `--ignored` to rewrite the shipped files after changing a definition.
    #[test]
    #[ignore]
    fn regenerate() {
        write_all(&default_dir()).unwrap();
    }

    #[test]
    fn stars_are_affine() {
        assert_eq!(delta(&e7_star()).unwrap().0, vec![4, 2, 3, 2, 1, 3, 2, 1]);
        assert_eq!(delta(&e8_star()).unwrap().0, vec![6, 3, 4, 2, 5, 4, 3, 2, 1]);
        assert_eq!(delta(&d4_quiver()).unwrap(), *m_lambda(2).dims());
    }

    #[test]
    fn loaders_round_trip() {
        let dir = default_dir();
        assert_eq!(load_quiver(&dir.join("d4/quiver.json")).unwrap().0, d4_quiver());
        assert_eq!(load_rep(&dir.join("d4/m_lambda.json")).unwrap(), m_lambda(2));
        assert_eq!(load_tube(&dir.join("d4/tube2.json")).unwrap(), d4_tube(2));
    }
}
