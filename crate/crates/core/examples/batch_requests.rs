//! Runs newline-delimited JSON requests through the batch driver and prints
//! one JSON response per line, as `gmhodge batch` does.

use gmhodge::cli::{batch, render_text, Command, Request};

fn main() {
    let requests = [
        Request::new("x^5-5*x", &["x"], Command::Pfeq),
        Request {
            generic: true,
            ..Request::new("x^4+y^4-x", &["x", "y"], Command::Dbeta)
        },
        Request {
            weights: Some(vec![4, 3]),
            ..Request::new("x^3+y^4", &["x", "y"], Command::Abeta)
        },
    ];
    let mut input: String = requests
        .iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect();
    input.push_str("{\"poly\": \"x^2*y^2\", \"vars\": [\"x\", \"y\"], \"command\": \"okbase\"}\n");

    for resp in batch(&input) {
        println!("{}", serde_json::to_string(&resp).expect("serializable"));
        print!("{}", render_text(&resp));
    }
}
