/**
 * Review UI: one differing classification at a time, five-point scoring,
 * live distribution panel. All state lives on the server; reloading the
 * page reproduces exactly what the run store holds.
 */
import { ApiError, getDiscrepancies, getDistribution, getRuns, postScore } from "./api.js";
import { SCORE_CHOICES, SCORE_LABELS, choiceToWire, distributionEntries, firstUnscoredIndex, isSubmittable, nextUnscoredIndex, pickDefaultRun, progressText, storedChoice, } from "./reviewCore.js";
function el(tag, attrs = {}, ...children) {
    const node = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) {
        if (value == null || value === false)
            continue;
        if (key === "className" && typeof value === "string")
            node.className = value;
        else if (key.startsWith("on") && typeof value === "function") {
            node.addEventListener(key.slice(2).toLowerCase(), value);
        }
        else if (value === true)
            node.setAttribute(key, "");
        else
            node.setAttribute(key, value);
    }
    for (const child of children) {
        if (typeof child === "string")
            node.appendChild(document.createTextNode(child));
        else if (child)
            node.appendChild(child);
    }
    return node;
}
const state = {
    runs: [],
    runId: null,
    rows: [],
    index: 0,
    selected: null,
    distribution: null,
    banner: null,
    retry: null,
    inlineError: null,
    busy: false,
};
const root = () => document.getElementById("app");
function notesField() {
    return document.getElementById("notes");
}
function reviewerField() {
    return document.getElementById("reviewer");
}
async function guarded(action) {
    try {
        state.banner = null;
        state.retry = null;
        await action();
    }
    catch (error) {
        if (error instanceof ApiError && error.status === 0) {
            state.banner = "Server unreachable. Your selection and notes are kept.";
            state.retry = action;
        }
        else if (error instanceof ApiError) {
            state.inlineError = error.message;
        }
        else {
            state.inlineError = String(error);
        }
    }
    render();
}
async function loadRuns() {
    state.runs = await getRuns();
    const chosen = pickDefaultRun(state.runs);
    if (chosen) {
        await loadRun(chosen.run_id);
    }
}
async function loadRun(runId) {
    state.runId = runId;
    state.rows = await getDiscrepancies(runId);
    state.distribution = await getDistribution(runId);
    const start = firstUnscoredIndex(state.rows);
    state.index = start === -1 ? 0 : start;
    state.selected = state.rows.length ? storedChoice(state.rows[state.index]) : null;
    state.inlineError = null;
}
async function refreshDistribution() {
    if (state.runId)
        state.distribution = await getDistribution(state.runId);
}
function currentRow() {
    return state.rows.length ? state.rows[state.index] : null;
}
function moveTo(index) {
    state.index = index;
    state.selected = storedChoice(state.rows[index]);
    state.inlineError = null;
    render();
    const notes = notesField();
    if (notes)
        notes.value = state.rows[index].notes ?? "";
}
async function submitScore() {
    const row = currentRow();
    if (!row || !isSubmittable(state.selected) || !state.runId)
        return;
    const choice = state.selected;
    const notes = notesField()?.value ?? "";
    const reviewer = reviewerField()?.value.trim() || "reviewer";
    state.busy = true;
    render();
    try {
        const result = await postScore(state.runId, row.arxiv_id, {
            score: choiceToWire(choice),
            notes,
            reviewer,
        });
        row.quality = result.quality;
        row.notes = notes;
        row.reviewer = reviewer;
        await refreshDistribution();
        const next = nextUnscoredIndex(state.rows, state.index);
        if (next !== -1) {
            moveTo(next);
        }
        else {
            state.inlineError = null;
            render();
        }
    }
    finally {
        state.busy = false;
        render();
    }
}
function codeChip(code) {
    return el("li", { className: "code-chip" }, el("span", { className: "code" }, code.code), code.hallucination
        ? el("span", { className: "badge-hallucination", title: "No such code in MSC 2020" }, "hallucination")
        : null, el("span", { className: "code-desc" }, code.description ?? "(no description available)"));
}
function codeList(heading, codes) {
    return el("section", { className: "code-list" }, el("h3", {}, heading), codes.length
        ? el("ul", {}, ...codes.map(codeChip))
        : el("p", { className: "muted" }, "none given"));
}
function scoreButtons() {
    return el("div", { className: "score-buttons", role: "radiogroup" }, ...SCORE_CHOICES.map((choice) => el("button", {
        className: `score-button${state.selected === choice ? " selected" : ""}`,
        type: "button",
        onClick: () => {
            state.selected = choice;
            state.inlineError = null;
            render();
        },
    }, el("strong", {}, choice), el("small", {}, SCORE_LABELS[choice]))));
}
function distributionPanel() {
    const payload = state.distribution;
    if (!payload)
        return el("aside", { className: "distribution" });
    return el("aside", { className: "distribution" }, el("h3", {}, "Quality distribution"), el("table", {}, ...distributionEntries(payload).map((entry) => el("tr", {}, el("td", { className: "dist-choice" }, entry.choice), el("td", { className: "dist-label" }, entry.label), el("td", { className: "dist-count" }, String(entry.count)))), el("tr", { className: "dist-unscored" }, el("td", {}, ""), el("td", {}, "unscored"), el("td", { className: "dist-count" }, String(payload.unscored)))));
}
function runSelector() {
    if (state.runs.length <= 1)
        return null;
    const select = el("select", {
        onChange: (event) => {
            const value = event.target.value;
            void guarded(() => loadRun(value));
        },
    });
    for (const run of state.runs) {
        const option = el("option", { value: run.run_id }, `${run.run_id} (${run.n_scored}/${run.n_differing} scored)`);
        option.selected = run.run_id === state.runId;
        select.appendChild(option);
    }
    return el("label", { className: "run-selector" }, "run ", select);
}
function rowCard(row) {
    return el("article", { className: "row-card" }, el("header", {}, el("a", { href: row.link, target: "_blank", rel: "noopener" }, `arXiv:${row.arxiv_id}`), el("span", { className: "muted" }, ` sampled under ${row.sampled_under}`), el("span", { className: "muted" }, ` · reply ${row.confidence}`)), el("h2", {}, row.title || "(title not captured in this run)"), el("p", { className: "abstract" }, row.abstract || "(abstract not captured in this run; follow the arXiv link)"), el("div", { className: "code-columns" }, codeList("arXiv ground truth", row.arxiv_codes), codeList("LLM primary", row.llm_primary), codeList("LLM secondary", row.llm_secondary)), el("p", { className: "metrics muted" }, `primary wrong ${row.n_primary_wrong} · primary missed ${row.n_primary_missed}` +
        ` · secondary extra ${row.n_secondary_extra}`));
}
function render() {
    const container = root();
    const previousNotes = notesField()?.value;
    const previousReviewer = reviewerField()?.value;
    container.replaceChildren();
    container.appendChild(el("header", { className: "app-header" }, el("h1", {}, "MSC classification review"), runSelector(), el("label", { className: "reviewer-label" }, "reviewer ", el("input", { id: "reviewer", value: previousReviewer ?? "reviewer" }))));
    if (state.banner) {
        container.appendChild(el("div", { className: "banner" }, state.banner, el("button", {
            type: "button",
            onClick: () => {
                const retry = state.retry;
                if (retry)
                    void guarded(retry);
            },
        }, "retry")));
    }
    const row = currentRow();
    if (!state.runId || state.rows.length === 0) {
        container.appendChild(el("p", { className: "empty-state" }, "No discrepancies to review. Matching classifications need no adjudication."));
        container.appendChild(distributionPanel());
        return;
    }
    const main = el("main", { className: "layout" });
    const left = el("div", { className: "work-column" });
    left.appendChild(el("nav", { className: "queue-nav" }, el("button", {
        type: "button",
        onClick: () => moveTo((state.index - 1 + state.rows.length) % state.rows.length),
    }, "previous"), el("span", { className: "progress" }, progressText(state.index, state.rows)), el("button", {
        type: "button",
        onClick: () => moveTo((state.index + 1) % state.rows.length),
    }, "next")));
    left.appendChild(rowCard(row));
    const scored = row.quality !== null;
    left.appendChild(el("section", { className: "scoring" }, el("h3", {}, scored ? "Scored (resubmit to change)" : "Score this classification"), scoreButtons(), el("textarea", {
        id: "notes",
        placeholder: "notes (optional)",
    }), state.inlineError
        ? el("p", { className: "inline-error" }, state.inlineError)
        : null, el("button", {
        className: "submit",
        type: "button",
        disabled: !isSubmittable(state.selected) || state.busy,
        onClick: () => void guarded(submitScore),
    }, state.busy ? "submitting..." : "submit score")));
    main.appendChild(left);
    main.appendChild(distributionPanel());
    container.appendChild(main);
    const notes = notesField();
    if (notes)
        notes.value = previousNotes ?? row.notes ?? "";
}
void guarded(loadRuns);
