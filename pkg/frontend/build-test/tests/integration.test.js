/**
 * End-to-end review flow against a live review server: evaluate the
 * bundled study tables into a scratch store, serve the API, then score
 * all 22 discrepancies through the same client code the page uses and
 * check the distribution and the emitted report.
 *
 * Skips itself when the Python package is not importable (the UI can be
 * developed standalone).
 */
import assert from "node:assert/strict";
import { spawn, spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";
import { ApiError, getDiscrepancies, getDistribution, getRuns, postScore, setApiBase } from "../src/api.js";
import { choiceToWire, firstUnscoredIndex, nextUnscoredIndex, pickDefaultRun, remainingCount, wireToChoice, } from "../src/reviewCore.js";
const here = path.dirname(fileURLToPath(import.meta.url));
// Compiled location is frontend/build-test/tests/, so the repo root is
// three levels up.
const repoRoot = path.resolve(here, "..", "..", "..");
const fixturePath = path.join(repoRoot, "src", "mscbench", "data", "study_tables.tsv");
const referenceScores = JSON.parse(readFileSync(path.join(repoRoot, "frontend", "tests", "data", "reference_scores.json"), "utf-8"));
const PORT = 8917;
const BASE = `http://127.0.0.1:${PORT}`;
function pythonAvailable() {
    const probe = spawnSync("python3", ["-c", "import mscbench"], { timeout: 30000 });
    return probe.status === 0;
}
async function waitForServer() {
    for (let attempt = 0; attempt < 100; attempt += 1) {
        try {
            const response = await fetch(`${BASE}/api/runs`);
            if (response.ok)
                return;
        }
        catch {
            // not up yet
        }
        await new Promise((resolve) => setTimeout(resolve, 200));
    }
    throw new Error("review server did not come up");
}
test("scoring every discrepancy through the UI client reproduces the study distribution", { timeout: 120000 }, async (t) => {
    if (!pythonAvailable()) {
        t.skip("python package not importable; API-backed flow untestable here");
        return;
    }
    const storeDir = mkdtempSync(path.join(tmpdir(), "mscbench-ui-"));
    let server = null;
    try {
        const evaluate = spawnSync("python3", ["-m", "mscbench.cli", "evaluate", "--store", storeDir, "--fixture", fixturePath], { timeout: 60000 });
        assert.equal(evaluate.status, 0, String(evaluate.stderr));
        server = spawn("python3", [
            "-c",
            [
                "import sys, uvicorn",
                "from mscbench.run_store import RunStore",
                "from mscbench.server import build_app",
                "uvicorn.run(build_app(RunStore(sys.argv[1])), host='127.0.0.1', port=int(sys.argv[2]), log_level='warning')",
            ].join("\n"),
            storeDir,
            String(PORT),
        ]);
        await waitForServer();
        setApiBase(BASE);
        const runs = await getRuns();
        const run = pickDefaultRun(runs);
        assert.ok(run, "an evaluated run must be listed");
        assert.equal(run.n_differing, 22);
        const rows = await getDiscrepancies(run.run_id);
        assert.equal(rows.length, 22);
        const hallucinated = rows.find((row) => row.arxiv_id === "2303.01437");
        assert.ok(hallucinated);
        assert.equal(hallucinated.llm_primary[0].code, "35Q72");
        assert.equal(hallucinated.llm_primary[0].hallucination, true);
        // Out-of-scale scores are rejected before any state changes.
        await assert.rejects(postScore(run.run_id, rows[0].arxiv_id, { score: 3, notes: "", reviewer: "r" }), (error) => error instanceof ApiError && error.status === 400);
        // Walk the queue exactly as the page does: start at the first
        // unscored row, submit, advance to the next unscored row.
        let index = firstUnscoredIndex(rows);
        let submitted = 0;
        while (index !== -1) {
            const row = rows[index];
            const wire = referenceScores[row.arxiv_id];
            assert.notEqual(wire, undefined, `no reference score for ${row.arxiv_id}`);
            const choice = wireToChoice(wire);
            const result = await postScore(run.run_id, row.arxiv_id, {
                score: choiceToWire(choice),
                notes: "",
                reviewer: "reference-tables",
            });
            row.quality = result.quality;
            submitted += 1;
            index = nextUnscoredIndex(rows, index);
        }
        assert.equal(submitted, 22);
        assert.equal(remainingCount(rows), 0);
        const payload = await getDistribution(run.run_id);
        assert.deepEqual(payload.distribution, { "+2": 12, "+1": 5, "=": 4, "-1": 0, "-2": 1 });
        assert.equal(payload.unscored, 0);
        // The emitted report reflects the review, and the -2 item is the
        // one the study scored way off.
        const report = spawnSync("python3", ["-m", "mscbench.cli", "report", "--store", storeDir], { timeout: 60000 });
        assert.equal(report.status, 0, String(report.stderr));
        const reportPath = String(report.stdout).trim().split("\n").pop();
        const document = readFileSync(reportPath, "utf-8");
        assert.match(document, /- \+2 \(LLM better than arXiv class\): 12/);
        assert.match(document, /- \+1 \(LLM slightly better than arXiv class\): 5/);
        assert.match(document, /- = \(arguable either way\): 4/);
        assert.match(document, /- -2 \(LLM way off\): 1/);
        const minusTwoRow = document
            .split("\n")
            .find((line) => line.includes("1801.04970"));
        assert.ok(minusTwoRow && minusTwoRow.includes("| -2 |"), "1801.04970 carries the -2");
    }
    finally {
        if (server)
            server.kill();
        rmSync(storeDir, { recursive: true, force: true });
    }
});
