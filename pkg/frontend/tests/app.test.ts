import { beforeEach, describe, expect, it, vi } from 'vitest';

import { initApp } from '../src/app';
import type { TimeBucket } from '../src/types';
import directionBuckets from './fixtures/direction_buckets.json';
import emotionBuckets from './fixtures/emotion_buckets.json';
import scatterFixture from './fixtures/scatter.json';

const PAYLOADS: Record<string, unknown> = {
    '/api/scatter': scatterFixture,
    '/api/aggregates/direction?width=2': directionBuckets,
    '/api/aggregates/emotion?width=2': emotionBuckets,
};

let requested: string[];
let root: HTMLElement;

function installFetch(overrides: Record<string, unknown> = {}) {
    requested = [];
    vi.stubGlobal(
        'fetch',
        vi.fn(async (input: RequestInfo | URL) => {
            const url = String(input);
            requested.push(url);
            const payload = { ...PAYLOADS, ...overrides }[url];
            if (payload === undefined) {
                return new Response(JSON.stringify({ error: `no fixture for ${url}` }), {
                    status: 404,
                });
            }
            if (payload instanceof Error) {
                throw payload;
            }
            return new Response(JSON.stringify(payload), { status: 200 });
        }),
    );
}

beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById('app') as HTMLElement;
    window.location.hash = '';
    installFetch();
});

describe('app routing', () => {
    it('renders the scatter view by default and calls only the scatter endpoint', async () => {
        const app = initApp(root);
        await app.navigate('#/scatter');
        expect(root.querySelector('svg.scatter')).not.toBeNull();
        expect(requested.filter((u) => u === '/api/scatter').length).toBeGreaterThan(0);
        expect(requested.every((u) => u in PAYLOADS)).toBe(true);
    });

    it('renders direction columns whose counts come verbatim from the API', async () => {
        const app = initApp(root);
        await app.navigate('#/directions');
        const rendered = Array.from(root.querySelectorAll('.column')).map((rect) => ({
            bucket: rect.getAttribute('data-bucket'),
            label: rect.getAttribute('data-label'),
            count: Number(rect.getAttribute('data-count')),
        }));
        // every rendered count equals the intercepted payload: the view adds no arithmetic
        for (const { bucket, label, count } of rendered) {
            const source = (directionBuckets as TimeBucket[]).find(
                (b) => String(b.startT) === bucket,
            )!;
            expect(count).toBe(source.counts[label!]);
        }
        expect(rendered.length).toBe(directionBuckets.length * 4);
    });

    it('renders emotion columns with toggle checkboxes', async () => {
        const app = initApp(root);
        await app.navigate('#/emotions');
        expect(root.querySelectorAll('input[type="checkbox"]').length).toBe(4);
        expect(root.querySelectorAll('.column').length).toBe(emotionBuckets.length * 4);
    });

    it('navigation marks the active link', async () => {
        const app = initApp(root);
        await app.navigate('#/directions');
        const active = root.querySelector('nav a.active') as HTMLAnchorElement;
        expect(active.dataset.route).toBe('#/directions');
    });

    it('shows an error banner instead of a blank canvas when the API fails', async () => {
        installFetch({ '/api/scatter': new Error('connection refused') });
        const app = initApp(root);
        await app.navigate('#/scatter');
        const banner = root.querySelector('.error-banner') as HTMLElement;
        expect(banner).not.toBeNull();
        expect(banner.textContent).toContain('connection refused');
        expect((root.querySelector('main') as HTMLElement).textContent).not.toBe('');
    });

    it('shows the API error body message on HTTP errors', async () => {
        installFetch({ '/api/aggregates/emotion?width=2': undefined });
        const app = initApp(root);
        await app.navigate('#/emotions');
        const banner = root.querySelector('.error-banner') as HTMLElement;
        expect(banner.textContent).toContain('no fixture');
    });
});
