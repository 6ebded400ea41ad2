mod common;

use std::fs;

use common::{fixture_dir, fixture_set, reserialize};

/// Rewrites the committed fixtures from the library.
#[test]
#[ignore]
fn regenerate_fixtures() {
    for (name, text) in fixture_set() {
        fs::write(fixture_dir().join(name), text).unwrap();
    }
}

#[test]
fn committed_fixtures_match_the_library() {
    let set = fixture_set();
    assert_eq!(set.len(), 20);
    for (name, text) in set {
        let on_disk = fs::read_to_string(fixture_dir().join(&name)).unwrap();
        assert!(on_disk == text, "{name} differs from its generator");
    }
}

#[test]
fn fixtures_round_trip_byte_identically() {
    for (name, text) in fixture_set() {
        assert!(reserialize(&name, &text) == text, "{name} changed on reload");
    }
}
