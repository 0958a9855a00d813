/** Thin fetch client for the review API; same-origin, JSON in and out. */
export class ApiError extends Error {
    status;
    constructor(status, message) {
        super(message);
        this.status = status;
    }
}
// Same-origin in the browser; tests point this at a live server.
let apiBase = "";
export function setApiBase(base) {
    apiBase = base.replace(/\/$/, "");
}
async function request(path, init) {
    let response;
    try {
        response = await fetch(apiBase + path, init);
    }
    catch {
        throw new ApiError(0, "server unreachable");
    }
    if (!response.ok) {
        let detail = `HTTP ${response.status}`;
        try {
            const body = (await response.json());
            if (body.detail)
                detail = body.detail;
        }
        catch {
            // non-JSON error body; keep the status text
        }
        throw new ApiError(response.status, detail);
    }
    return (await response.json());
}
export function getRuns() {
    return request("/api/runs");
}
export function getDiscrepancies(runId) {
    return request(`/api/runs/${encodeURIComponent(runId)}/discrepancies`);
}
export function getDistribution(runId) {
    return request(`/api/runs/${encodeURIComponent(runId)}/distribution`);
}
export function postScore(runId, arxivId, submission) {
    return request(`/api/runs/${encodeURIComponent(runId)}/rows/${encodeURIComponent(arxivId)}/score`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(submission),
    });
}
