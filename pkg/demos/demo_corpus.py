"""Tiny hand-written travel-desk corpus shared by the demo scripts.

Two fictional editorial desks cover the same magazine: the "ridge" desk
writes about mountain trekking, the "harbor" desk about coastal sailing.
Each desk leans on its own recurring vocabulary, which is exactly the
kind of signal the sentence classifier picks up on.
"""

from slantsum import Article, Dataset, build_dataset

RIDGE_ARTICLES = [
    "The summit trail climbs steeply from the alpine camp. Climbers crossed the glacier before the snow softened. "
    "The ridge above the camp was plastered in fresh snow. Every climber roped up for the glacier crossing. "
    "From the summit the whole valley opened below the ridge. The descent trail reached camp before the afternoon storm.",
    "Heavy snow closed the high trail for three days. The climbers waited at the glacier camp for clear weather. "
    "Altitude headaches are common above the upper camp. The guide fixed ropes along the icy ridge. "
    "A cornice broke near the summit slope overnight. The team still reached the summit by the north ridge.",
    "New boots punished the trekkers on the rocky trail. The alpine valley blazed with wildflowers below the peak. "
    "A storm pinned the climbers in camp at altitude. Hot soup revived the rope team after the glacier slog. "
    "The peak stayed hidden in cloud until dawn. Sunrise lit the summit ridge a deep rose.",
    "The traverse follows the ridge over five rocky peaks. Climbers fixed ropes across the exposed slope. "
    "Rockfall rakes the gully below the trail after noon. Helmets stayed on from camp to summit. "
    "The glacier has thinned badly in a decade. Old camp photographs show ice where the trail now crosses rock.",
    "Avalanche training is mandatory for the winter trail. The class probed the snow slope above camp in pairs. "
    "Ski tourers climbed the peak on skins before dawn. The snowpack settled with a thump that stopped every climber. "
    "The summit wore a plume of windblown snow. Frostbite turned one rope team back below the ridge.",
    "Permits for the peak sell out by dawn in summer. The hut below the summit rations bunks and stew. "
    "The trail switchbacks up a slope of talus and scree. A marmot raided a pack left by the glacier overlook. "
    "Thunderheads boiled over the valley by noon. Trekkers glissaded down the snow slope laughing.",
    "Altitude sickness crept in above the high camp. The guide ordered a rest day beside the glacier tarn. "
    "Summit fever tempts climbers past their turnaround time. The ridge narrowed to a boot-width catwalk of rock. "
    "Clouds swallowed the valley a thousand meters below the trail. Every climber tagged the summit and ran for camp.",
]

HARBOR_ARTICLES = [
    "The sloop cleared the harbor breakwater at slack tide. A steady breeze filled the sail as the crew trimmed. "
    "Gulls wheeled over the fishing boats by the marina. The skipper eased the boat onto a close reach. "
    "Seals hauled out on the channel buoy at low tide. The crew dropped anchor in the lee of the headland.",
    "Storm warnings kept every boat inside the marina. Halyards slapped the masts along the harbor wall. "
    "The harbormaster doubled the mooring lines at the dock. Surf pounded the breakwater at high tide. "
    "A catamaran dragged its anchor across the channel. The crew rigged fenders against the surge at the dock.",
    "The regatta fleet crossed the line under full sail. Tacticians hunted the breeze up the first beat. "
    "One boat ducked the whole starboard parade near the buoy. The committee shortened the course as the wind died. "
    "Protest flags flew after a tangle at the channel mark. The trophy went to the smallest boat in the harbor.",
    "Dawn fog pinned the ferry to the harbor slip. The anchorage showed only mast tips above the haze. "
    "A foghorn answered every blast from beyond the breakwater. The pilot boat idled beside the channel marker. "
    "Deckhands coiled wet mooring lines on the dock. By midmorning the breeze burned the fog off the tide line.",
    "The tide tables rule every passage through the channel. An ebb tide against the wind stacks up steep chop. "
    "The crew timed the narrows for slack tide and motored through. Current swirled around the mooring pilings. "
    "A kayaker surfed the standing wave off the breakwater. The chart warns of a shoal that dries at low tide.",
    "Provisioning the boat for the offshore leg took two days. The crew lashed jerry cans along the deck rails. "
    "A rigger went up the mast to check the spreaders. The liferaft under the boom was overdue for service. "
    "They swung the compass in the outer harbor. The forecast promised a fair breeze for three days of sail.",
    "Night watch began with phosphorescence in the wake. The helm steered by a low star and the masthead windvane. "
    "A freighter crossed the channel a mile off, lights blazing. Dolphins rode the bow wave past the fairway buoy. "
    "The off watch slept in foul-weather gear below deck. Landfall showed as a loom of harbor light before dawn.",
]

MIXED_ARTICLE = Article(
    "feature/coast-to-crest",
    "The coast-to-crest route starts at the harbor gate and ends on the summit. "
    "Day one follows the breakwater past the marina and the fishing boats. "
    "A water taxi crosses the channel at slack tide to the trailhead. "
    "The trail climbs from the tide line into the foothills through old orchards. "
    "By day three the path gains the ridge and the real climbing begins. "
    "Crampons come out where the slope holds summer snow. "
    "Far below the switchbacks, sails dot the anchorage like white moths. "
    "Sailors and climbers trade weather lore in the summit register. "
    "The descent returns past the lighthouse to the harbor dock. "
    "Either desk would claim this route as its own.",
    title="From the breakwater to the summit ridge",
)


def build() -> Dataset:
    """Labeled dataset over both desks, ridge first."""
    articles = [Article(f"ridge/{i:02d}", body, source_label="ridge")
                for i, body in enumerate(RIDGE_ARTICLES)]
    articles += [Article(f"harbor/{i:02d}", body, source_label="harbor")
                 for i, body in enumerate(HARBOR_ARTICLES)]
    return build_dataset(articles)
