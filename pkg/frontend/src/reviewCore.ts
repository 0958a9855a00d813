/**
 * Pure review-flow logic: score encodings, queue ordering, progress.
 *
 * No scoring decisions happen here; the server computes everything.
 * These helpers only translate between the wire format (integers, with
 * 0 for "arguable either way") and the display format ("=", "+1", ...),
 * and decide which row to show next.
 */

import type { DiscrepancyRow, DistributionPayload, RunSummary } from "./types.js";

/** Display order for the five-point scale, best to worst. */
export const SCORE_CHOICES = ["+2", "+1", "=", "-1", "-2"] as const;

export type ScoreChoice = (typeof SCORE_CHOICES)[number];

export const SCORE_LABELS: Record<ScoreChoice, string> = {
  "+2": "LLM better than arXiv class",
  "+1": "LLM slightly better than arXiv class",
  "=": "arguable either way",
  "-1": "LLM slightly off",
  "-2": "LLM way off",
};

/** "=" travels as 0; everything else as its signed integer. */
export function choiceToWire(choice: ScoreChoice): number {
  return choice === "=" ? 0 : parseInt(choice, 10);
}

export function wireToChoice(value: number): ScoreChoice {
  if (value === 0) return "=";
  const choice = (value > 0 ? `+${value}` : `${value}`) as ScoreChoice;
  if (!SCORE_CHOICES.includes(choice)) {
    throw new Error(`score ${value} is outside the five-point scale`);
  }
  return choice;
}

export function isSubmittable(selected: ScoreChoice | null): boolean {
  return selected !== null;
}

/** Index of the first unscored row, or -1 when everything is scored. */
export function firstUnscoredIndex(rows: DiscrepancyRow[]): number {
  return rows.findIndex((row) => row.quality === null);
}

/**
 * Index of the next unscored row after `after`, scanning forward and
 * wrapping once; -1 when no unscored rows remain.
 */
export function nextUnscoredIndex(rows: DiscrepancyRow[], after: number): number {
  const n = rows.length;
  for (let step = 1; step <= n; step += 1) {
    const index = (after + step) % n;
    if (rows[index].quality === null) return index;
  }
  return -1;
}

export function remainingCount(rows: DiscrepancyRow[]): number {
  return rows.filter((row) => row.quality === null).length;
}

export function progressText(index: number, rows: DiscrepancyRow[]): string {
  const remaining = remainingCount(rows);
  return `item ${index + 1} of ${rows.length}, ${remaining} unscored`;
}

export interface DistributionEntry {
  choice: ScoreChoice;
  label: string;
  count: number;
}

/** Distribution rows in display order, labels from the server if given. */
export function distributionEntries(
  payload: DistributionPayload,
): DistributionEntry[] {
  return SCORE_CHOICES.map((choice) => ({
    choice,
    label: payload.labels[choice] ?? SCORE_LABELS[choice],
    count: payload.distribution[choice] ?? 0,
  }));
}

export function scoredTotal(payload: DistributionPayload): number {
  return Object.values(payload.distribution).reduce((sum, n) => sum + n, 0);
}

/** Newest run that has anything to review, else newest run, else null. */
export function pickDefaultRun(runs: RunSummary[]): RunSummary | null {
  if (runs.length === 0) return null;
  const withWork = runs.filter((run) => run.n_differing > 0);
  const pool = withWork.length > 0 ? withWork : runs;
  return pool[pool.length - 1];
}

/** Pre-selection for a row: its stored score as a display choice. */
export function storedChoice(row: DiscrepancyRow): ScoreChoice | null {
  return row.quality === null ? null : wireToChoice(row.quality);
}
