//! Configuration files on disk: affine input, canonical projective output,
//! multiplicities, and saved reports.

use flatspan::io::{config_to_string, load_config, parse_config, save_config, LoadedConfig};
use flatspan::pointset::Configuration;
use flatspan::suites::{rich_report, save_report, ReportFormat};
use flatspan::{MultiPointSet, Point};

fn main() {
    // Affine input: coordinates are rationals as "a" or "a/b" strings, one
    // fewer than for projective input; loading embeds them homogeneously.
    let affine = r#"{
        "schema": 1,
        "ambient_dim": 2,
        "projective": false,
        "points": [
            {"coords": ["0", "0"]},
            {"coords": ["1", "0"]},
            {"coords": ["1/2", "1/3"], "multiplicity": 2}
        ]
    }"#;
    let config = parse_config(affine).unwrap();
    println!("loaded {} points, total weight {}", config.support_len(), config.total_weight());
    assert_eq!(config.total_weight(), 4);

    // Saved form is always canonical projective, so save/load round-trips
    // byte for byte.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.json");
    save_config(&config, &path).unwrap();
    let reloaded = load_config(&path).unwrap();
    assert_eq!(config_to_string(&config), config_to_string(&reloaded));
    println!("canonical form:\n{}", config_to_string(&config));

    // Weighted points merge on load when coordinates coincide.
    let doubled = LoadedConfig::from(
        MultiPointSet::from_occurrences(
            1,
            vec![
                (Point::from_integers(&[1, 1]).unwrap(), 1),
                (Point::from_integers(&[2, 2]).unwrap(), 1), // same projective point
                (Point::from_integers(&[1, 0]).unwrap(), 1),
            ],
        )
        .unwrap(),
    );
    assert_eq!(doubled.support_len(), 2);
    assert_eq!(doubled.total_weight(), 3);

    // Reports save the same way: JSON with stable key order, or CSV.
    let report = rich_report(&config, 1, &[2, 3], &[flatspan::scalar::ratio(1, 2)]).unwrap();
    let json_path = dir.path().join("report.json");
    let csv_path = dir.path().join("report.csv");
    save_report(&report, &json_path, ReportFormat::Json).unwrap();
    save_report(&report, &csv_path, ReportFormat::Csv).unwrap();
    println!(
        "saved report twice: {} bytes json, {} bytes csv",
        std::fs::metadata(&json_path).unwrap().len(),
        std::fs::metadata(&csv_path).unwrap().len()
    );
}
