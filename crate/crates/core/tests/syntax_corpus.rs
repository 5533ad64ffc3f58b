use std::fs;
use std::path::PathBuf;

use tptp_interp::syntax::{parse_file, print_units};

fn fixtures() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("p" | "s")))
        .collect();
    files.sort();
    files
}

#[test]
fn every_fixture_parses_cleanly() {
    for path in fixtures() {
        let text = fs::read_to_string(&path).unwrap();
        let out = parse_file(&text);
        assert!(
            out.diagnostics.is_empty(),
            "{}: {:?}",
            path.display(),
            out.diagnostics
        );
        assert!(!out.units.is_empty(), "{}", path.display());
    }
}

#[test]
fn printing_is_a_round_trip() {
    for path in fixtures() {
        let text = fs::read_to_string(&path).unwrap();
        let units = parse_file(&text).units;
        let printed = print_units(&units);
        let reparsed = parse_file(&printed);
        assert!(reparsed.diagnostics.is_empty(), "{}: {:?}", path.display(), reparsed.diagnostics);
        assert_eq!(reparsed.units, units, "{}", path.display());
        assert_eq!(print_units(&reparsed.units), printed, "{}", path.display());
    }
}
