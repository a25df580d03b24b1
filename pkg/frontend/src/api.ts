import type { ScatterSeries, SessionEntry, TimeBucket } from './types';

// All numbers shown anywhere in the UI come straight from these endpoints;
// the views only scale them into pixels.

async function getJson<T>(path: string): Promise<T> {
    const response = await fetch(path);
    if (!response.ok) {
        let detail = `HTTP ${response.status}`;
        try {
            const body = await response.json();
            if (body && typeof body.error === 'string') detail = body.error;
        } catch {
            // non-JSON error body; keep the status text
        }
        throw new Error(`${path}: ${detail}`);
    }
    return response.json() as Promise<T>;
}

export function fetchSessions(): Promise<SessionEntry[]> {
    return getJson('/api/sessions');
}

export function fetchScatter(): Promise<ScatterSeries[]> {
    return getJson('/api/scatter');
}

export function fetchDirectionBuckets(width = 2): Promise<TimeBucket[]> {
    return getJson(`/api/aggregates/direction?width=${width}`);
}

export function fetchEmotionBuckets(width = 2): Promise<TimeBucket[]> {
    return getJson(`/api/aggregates/emotion?width=${width}`);
}
