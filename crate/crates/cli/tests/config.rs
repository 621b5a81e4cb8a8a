use repeatvote::voters::{Dist, PreferenceModel, SecondCost, StrategicShare};
use repeatvote::{ElectionRule, ProcedureVariant, ScenarioConfig, SweepValue};
use repeatvote_cli::{expand_sweep, parse_config, parse_config_str, to_config_string};

const MINIMAL: &str = r#"
schema_version = 1
seed = 9
replications = 10
variants = ["two_round_sum"]

[electorate]
voters = 100
options = 3

[rule]
kind = "plurality"
"#;

fn with_rule(rule: &str, options: usize, variants: &str) -> String {
    format!(
        "schema_version = 1\nseed = 1\nreplications = 5\nvariants = {variants}\n\n\
         [electorate]\nvoters = 50\noptions = {options}\n\n[rule]\n{rule}\n"
    )
}

#[test]
fn minimal_config_has_zero_defaults() {
    let cfg = parse_config_str(MINIMAL).unwrap();
    assert_eq!(cfg.master_seed, 9);
    assert_eq!(cfg.replications, 10);
    assert_eq!(cfg.variants, vec![ProcedureVariant::TwoRoundSum]);
    assert_eq!(cfg.rule, ElectionRule::Plurality);
    let e = &cfg.electorate;
    assert_eq!((e.voters, e.options), (100, 3));
    assert_eq!(e.preferences, PreferenceModel::Uniform);
    for d in [e.cost_r1, e.bandwagon, e.underdog, e.closeness] {
        assert_eq!(d, Dist::Fixed(0.0));
    }
    assert_eq!(e.cost_r2, SecondCost::SameAsFirst);
    assert_eq!(e.viability_strategic, StrategicShare(0.0));
    assert!(!e.compulsory);
    assert!(cfg.sweep.is_empty());
}

#[test]
fn low_quota_is_rejected_with_field_path() {
    let text = with_rule(
        "kind = \"supermajority\"\nquota = 0.4",
        2,
        "[\"two_round_sum\"]",
    );
    let err = parse_config_str(&text).unwrap_err();
    assert_eq!(err.field, "rule.quota");
    assert!(err.to_string().contains("quota must exceed 1/2"), "{err}");
}

#[test]
fn best_of_three_needs_two_options() {
    let err =
        parse_config_str(&with_rule("kind = \"plurality\"", 3, "[\"best_of_three\"]")).unwrap_err();
    assert_eq!(err.field, "variants[0]");
    assert!(err.message.contains("two-outcome"), "{err}");
}

#[test]
fn unknown_variant_is_rejected() {
    let err = parse_config_str(&with_rule(
        "kind = \"plurality\"",
        2,
        "[\"instant_runoff\"]",
    ))
    .unwrap_err();
    assert!(err.to_string().contains("variants"), "{err}");
}

#[test]
fn missing_field_reports_its_name_and_line() {
    let text = MINIMAL.replace("replications = 10\n", "");
    let err = parse_config_str(&text).unwrap_err().to_string();
    assert!(err.contains("replications"), "{err}");
    assert!(err.contains("line"), "{err}");
}

#[test]
fn unknown_key_is_rejected() {
    let text = MINIMAL.replace("options = 3", "options = 3\nturnout_bias = 0.2");
    let err = parse_config_str(&text).unwrap_err().to_string();
    assert!(err.contains("turnout_bias"), "{err}");
}

#[test]
fn file_errors_name_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("absent.cfg");
    let err = parse_config(&path).unwrap_err();
    assert_eq!(err.origin.as_deref(), Some(path.as_path()));
}

#[test]
fn every_cookbook_scenario_round_trips() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../cookbook");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let cfg = parse_config(&path).unwrap_or_else(|e| panic!("{e}"));
        let text = to_config_string(&cfg).unwrap();
        let again: ScenarioConfig =
            parse_config_str(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(again, cfg, "{}", path.display());
        seen += 1;
    }
    assert_eq!(seen, 6);
}

#[test]
fn sweep_is_a_cross_product_in_key_order() {
    let text = format!(
        "{MINIMAL}\n[sweep]\n\"electorate.closeness\" = [0, 0.5]\n\"electorate.voters\" = [10, 20, 30]\n"
    );
    let cfg = parse_config_str(&text).unwrap();
    assert_eq!(
        cfg.sweep["electorate.voters"],
        vec![
            SweepValue::Int(10),
            SweepValue::Int(20),
            SweepValue::Int(30)
        ]
    );
    let points = expand_sweep(&cfg).unwrap();
    assert_eq!(points.len(), 6);
    assert_eq!(
        points[0].label,
        "[electorate.closeness=0;electorate.voters=10]"
    );
    assert_eq!(
        points[5].label,
        "[electorate.closeness=0.5;electorate.voters=30]"
    );
    assert_eq!(points[4].config.electorate.closeness, Dist::Fixed(0.5));
    assert_eq!(points[4].config.electorate.voters, 20);
    assert!(points
        .iter()
        .all(|p| p.config.sweep.is_empty() && p.config.master_seed == 9));
}

#[test]
fn sweep_point_values_are_validated() {
    let text = format!("{MINIMAL}\n[sweep]\n\"electorate.options\" = [3, 1]\n");
    let cfg = parse_config_str(&text).unwrap();
    let err = expand_sweep(&cfg).unwrap_err();
    assert_eq!(err.field, "electorate.options");
}

#[test]
fn sweep_of_a_missing_table_fails() {
    let text = format!("{MINIMAL}\n[sweep]\n\"ballot.size\" = [1]\n");
    let err = expand_sweep(&parse_config_str(&text).unwrap()).unwrap_err();
    assert_eq!(err.field, "sweep.ballot.size");
}

#[test]
fn config_without_sweep_is_one_point() {
    let cfg = parse_config_str(MINIMAL).unwrap();
    let points = expand_sweep(&cfg).unwrap();
    assert_eq!(points.len(), 1);
    assert_eq!(points[0].config, cfg);
}
