import assert from "node:assert/strict";
import { test } from "node:test";
import { SCORE_CHOICES, SCORE_LABELS, choiceToWire, distributionEntries, firstUnscoredIndex, isSubmittable, nextUnscoredIndex, pickDefaultRun, progressText, remainingCount, scoredTotal, storedChoice, wireToChoice, } from "../src/reviewCore.js";
function row(arxivId, quality) {
    return {
        arxiv_id: arxivId,
        link: `https://arxiv.org/abs/${arxivId}`,
        title: "t",
        abstract: "a",
        sampled_under: "06",
        arxiv_codes: [],
        llm_primary: [],
        llm_secondary: [],
        n_primary_wrong: 1,
        n_primary_missed: 0,
        n_secondary_extra: 0,
        confidence: "definitive",
        quality,
        reviewer: "",
        notes: "",
    };
}
test("the five-point scale is complete and ordered best to worst", () => {
    assert.deepEqual([...SCORE_CHOICES], ["+2", "+1", "=", "-1", "-2"]);
    for (const choice of SCORE_CHOICES) {
        assert.ok(SCORE_LABELS[choice].length > 0);
    }
});
test("= maps to score 0 on the wire", () => {
    assert.equal(choiceToWire("="), 0);
    assert.equal(choiceToWire("+2"), 2);
    assert.equal(choiceToWire("-1"), -1);
});
test("wire values round-trip through display choices", () => {
    for (const choice of SCORE_CHOICES) {
        assert.equal(wireToChoice(choiceToWire(choice)), choice);
    }
});
test("out-of-scale wire values are rejected", () => {
    assert.throws(() => wireToChoice(3), /five-point scale/);
    assert.throws(() => wireToChoice(-3), /five-point scale/);
});
test("submit requires a selected score", () => {
    assert.equal(isSubmittable(null), false);
    assert.equal(isSubmittable("="), true);
});
test("queue starts at the first unscored row", () => {
    const rows = [row("a", 2), row("b", null), row("c", null)];
    assert.equal(firstUnscoredIndex(rows), 1);
    assert.equal(firstUnscoredIndex([row("a", 0)]), -1);
    assert.equal(firstUnscoredIndex([]), -1);
});
test("advancing skips scored rows and wraps once", () => {
    const rows = [row("a", null), row("b", 1), row("c", null)];
    assert.equal(nextUnscoredIndex(rows, 0), 2);
    assert.equal(nextUnscoredIndex(rows, 2), 0);
    rows[0].quality = 0;
    rows[2].quality = -2;
    assert.equal(nextUnscoredIndex(rows, 1), -1);
});
test("remaining count and progress text update with scores", () => {
    const rows = [row("a", null), row("b", 1), row("c", null)];
    assert.equal(remainingCount(rows), 2);
    assert.equal(progressText(1, rows), "item 2 of 3, 2 unscored");
    rows[0].quality = 2;
    assert.equal(remainingCount(rows), 1);
});
test("distribution entries keep display order and server labels", () => {
    const payload = {
        distribution: { "+2": 12, "+1": 5, "=": 4, "-1": 0, "-2": 1 },
        unscored: 0,
        labels: { "+2": "LLM better than arXiv class" },
    };
    const entries = distributionEntries(payload);
    assert.deepEqual(entries.map((entry) => [entry.choice, entry.count]), [["+2", 12], ["+1", 5], ["=", 4], ["-1", 0], ["-2", 1]]);
    assert.equal(entries[0].label, "LLM better than arXiv class");
    assert.equal(entries[2].label, "arguable either way");
    assert.equal(scoredTotal(payload), 22);
});
test("the reference scoring of all 22 discrepancies totals correctly", () => {
    // Printed scores: 12 at +2, 5 at +1, 4 at =, 1 at -2.
    const scores = [
        ...Array(12).fill(2),
        ...Array(5).fill(1),
        ...Array(4).fill(0),
        -2,
    ];
    assert.equal(scores.length, 22);
    const distribution = { "+2": 0, "+1": 0, "=": 0, "-1": 0, "-2": 0 };
    for (const value of scores) {
        distribution[wireToChoice(value)] += 1;
    }
    assert.deepEqual(distribution, { "+2": 12, "+1": 5, "=": 4, "-1": 0, "-2": 1 });
});
test("default run is the newest with work to review", () => {
    const runs = [
        { run_id: "r1", created: "", n_rows: 56, n_differing: 22, n_scored: 22 },
        { run_id: "r2", created: "", n_rows: 10, n_differing: 0, n_scored: 0 },
        { run_id: "r3", created: "", n_rows: 56, n_differing: 22, n_scored: 3 },
    ];
    assert.equal(pickDefaultRun(runs)?.run_id, "r3");
    assert.equal(pickDefaultRun([runs[1]])?.run_id, "r2");
    assert.equal(pickDefaultRun([]), null);
});
test("stored scores preselect their display choice", () => {
    assert.equal(storedChoice(row("a", null)), null);
    assert.equal(storedChoice(row("a", 0)), "=");
    assert.equal(storedChoice(row("a", -2)), "-2");
});
