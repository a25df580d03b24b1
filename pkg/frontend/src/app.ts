import { fetchDirectionBuckets, fetchEmotionBuckets, fetchScatter } from './api';
import { DIRECTION_COLORS, EMOTION_COLORS } from './color';
import { renderColumns } from './columns';
import { renderScatter } from './scatter';

export type Route = '#/scatter' | '#/directions' | '#/emotions';

const ROUTES: Array<{ hash: Route; label: string }> = [
    { hash: '#/scatter', label: 'Movement scatter' },
    { hash: '#/directions', label: 'Movements by direction' },
    { hash: '#/emotions', label: 'Emotions' },
];

export interface AppHandle {
    navigate(route: Route): Promise<void>;
    currentRoute(): Route;
}

function showError(main: HTMLElement, error: unknown): void {
    main.textContent = '';
    const banner = document.createElement('div');
    banner.className = 'error-banner';
    banner.setAttribute('role', 'alert');
    banner.textContent = `Could not load data: ${error instanceof Error ? error.message : error}`;
    const hint = document.createElement('p');
    hint.textContent = 'Check that the session service is running, then reload.';
    main.appendChild(banner);
    main.appendChild(hint);
}

export function initApp(root: HTMLElement): AppHandle {
    root.textContent = '';
    const nav = document.createElement('nav');
    for (const { hash, label } of ROUTES) {
        const link = document.createElement('a');
        link.href = hash;
        link.textContent = label;
        link.dataset.route = hash;
        nav.appendChild(link);
    }
    const main = document.createElement('main');
    root.appendChild(nav);
    root.appendChild(main);

    let route: Route = '#/scatter';

    async function render(): Promise<void> {
        for (const link of Array.from(nav.querySelectorAll('a'))) {
            link.classList.toggle('active', link.dataset.route === route);
        }
        main.textContent = 'Loading…';
        try {
            if (route === '#/scatter') {
                const series = await fetchScatter();
                main.textContent = '';
                renderScatter(main, series);
            } else if (route === '#/directions') {
                const buckets = await fetchDirectionBuckets(2);
                main.textContent = '';
                renderColumns(main, buckets, {
                    labels: ['UP', 'DOWN', 'LEFT', 'RIGHT'],
                    colors: DIRECTION_COLORS,
                });
            } else {
                const buckets = await fetchEmotionBuckets(2);
                main.textContent = '';
                renderColumns(main, buckets, {
                    labels: ['ANGRY', 'HAPPY', 'SAD', 'SURPRISED'],
                    colors: EMOTION_COLORS,
                    withToggles: true,
                });
            }
        } catch (error) {
            showError(main, error);
        }
    }

    const handle: AppHandle = {
        currentRoute: () => route,
        async navigate(next: Route): Promise<void> {
            route = next;
            await render();
        },
    };

    window.addEventListener('hashchange', () => {
        const hash = window.location.hash as Route;
        if (ROUTES.some((r) => r.hash === hash)) {
            void handle.navigate(hash);
        }
    });

    const initial = window.location.hash as Route;
    void handle.navigate(ROUTES.some((r) => r.hash === initial) ? initial : '#/scatter');
    return handle;
}

const mount = typeof document !== 'undefined' ? document.getElementById('app') : null;
if (mount) {
    initApp(mount);
}
