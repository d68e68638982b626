use rainbowj::family::SurveyRow;
use rainbowj::JDecision;

fn admits(d: &JDecision) -> &'static str {
    if d.admits {
        "yes"
    } else {
        "no"
    }
}

fn value(d: &JDecision) -> String {
    d.j_number.map(|k| k.to_string()).unwrap_or_else(|| "-".into())
}

fn cells(row: &SurveyRow) -> [String; 9] {
    let (oracle_admits, oracle_value) = match &row.oracle {
        Some(o) => (admits(o).to_string(), value(o)),
        None => ("budget".to_string(), "-".to_string()),
    };
    [
        row.instance.name().to_string(),
        row.instance.params(),
        admits(&row.closed_form).to_string(),
        value(&row.closed_form),
        row.closed_form.rule.to_string(),
        oracle_admits,
        oracle_value,
        row.agree.to_string(),
        row.notes.clone(),
    ]
}

const HEADER: [&str; 9] = [
    "family",
    "params",
    "closed_admits",
    "closed_value",
    "rule",
    "oracle_admits",
    "oracle_value",
    "agree",
    "notes",
];

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(rows: &[SurveyRow]) -> String {
    let mut out = HEADER.join(",") + "\n";
    for row in rows {
        let line: Vec<String> = cells(row).iter().map(|c| csv_field(c)).collect();
        out += &(line.join(",") + "\n");
    }
    out
}

pub fn markdown(rows: &[SurveyRow]) -> String {
    let mut out = format!("| {} |\n", HEADER.join(" | "));
    out += &format!("|{}\n", "---|".repeat(HEADER.len()));
    for row in rows {
        out += &format!("| {} |\n", cells(row).join(" | "));
    }
    out
}
