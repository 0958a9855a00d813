/** Payload shapes served by the review API (see the repo README). */
export {};
