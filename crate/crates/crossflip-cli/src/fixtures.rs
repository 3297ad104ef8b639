//! Bundled facet-list fixtures with their frozen expected invariants.
//!
//! Files live under `fixtures/` and are compiled in; setting
//! `CROSSFLIP_FIXTURE_DIR` reads them from that directory instead, so a
//! checkout can test alternative transcriptions without rebuilding.

use std::env;
use std::fs;
use std::path::Path;

pub struct Fixture {
    pub name: &'static str,
    pub file: &'static str,
    data: &'static str,
    pub f: &'static [usize],
    pub betti: &'static [usize],
    pub shelling_file: Option<&'static str>,
    pub knot_file: Option<&'static str>,
    pub note: &'static str,
}

const AUX: &[(&str, &str)] = &[
    (
        "double_trefoil_22_shelling.txt",
        include_str!("../fixtures/double_trefoil_22_shelling.txt"),
    ),
    (
        "double_trefoil_22_knot.txt",
        include_str!("../fixtures/double_trefoil_22_knot.txt"),
    ),
    (
        "triple_trefoil_28_knot.txt",
        include_str!("../fixtures/triple_trefoil_28_knot.txt"),
    ),
];

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "rp3_16",
        file: "rp3_16.txt",
        data: include_str!("../fixtures/rp3_16.txt"),
        f: &[1, 16, 88, 144, 72],
        betti: &[1, 1, 1, 1],
        shelling_file: None,
        knot_file: None,
        note: "balanced centrally symmetric real projective 3-space; all vertex links isomorphic",
    },
    Fixture {
        name: "double_trefoil_22",
        file: "double_trefoil_22.txt",
        data: include_str!("../fixtures/double_trefoil_22.txt"),
        f: &[1, 22, 136, 228, 114],
        betti: &[1, 0, 0, 1],
        shelling_file: Some("double_trefoil_22_shelling.txt"),
        knot_file: Some("double_trefoil_22_knot.txt"),
        note: "shellable but not vertex-decomposable 3-sphere; a double trefoil spans 6 edges",
    },
    Fixture {
        name: "triple_trefoil_28",
        file: "triple_trefoil_28.txt",
        data: include_str!("../fixtures/triple_trefoil_28.txt"),
        f: &[1, 28, 204, 352, 176],
        betti: &[1, 0, 0, 1],
        shelling_file: None,
        knot_file: Some("triple_trefoil_28_knot.txt"),
        note: "non-constructible (hence non-shellable) 3-sphere; a triple trefoil spans 6 edges",
    },
];

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

fn dir_override(file: &str) -> Option<String> {
    let dir = env::var_os("CROSSFLIP_FIXTURE_DIR")?;
    fs::read_to_string(Path::new(&dir).join(file)).ok()
}

/// Text of a fixture's facet file, honoring the directory override.
pub fn load(fixture: &Fixture) -> String {
    dir_override(fixture.file).unwrap_or_else(|| fixture.data.to_string())
}

/// Text of a bundled auxiliary file (shelling orders, knot edges).
pub fn load_aux(file: &str) -> Option<String> {
    if let Some(text) = dir_override(file) {
        return Some(text);
    }
    AUX.iter().find(|(n, _)| *n == file).map(|(_, d)| d.to_string())
}
