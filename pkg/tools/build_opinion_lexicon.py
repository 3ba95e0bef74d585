#!/usr/bin/env python3
"""Regenerate src/subjsearch/resources/opinion_lexicon.tsv.

The lexicon is a curated list of polarity-tagged words seen in service
reviews (hotels, attractions, restaurants). Values are one of
-1.0 / -0.5 / +0.5 / +1.0. Derived forms (comparatives, adverbs, plurals)
are spelled out explicitly so nothing is invented at load time.
"""

from pathlib import Path

STRONG_POS = """
amazing awesome beautiful breathtaking brilliant delicious delightful divine
exceptional excellent exquisite extraordinary fabulous fantastic flawless
gorgeous heavenly immaculate impeccable incredible magnificent marvelous
outstanding perfect phenomenal pristine remarkable spectacular splendid
stellar stunning sublime superb terrific unbeatable unforgettable wonderful
world-class first-rate five-star top-notch luxurious lavish opulent plush
idyllic paradise masterpiece gem jewel bliss blissful enchanting captivating
mesmerizing dazzling radiant glorious majestic grand regal palatial
sumptuous decadent indulgent heavenly-smelling mouthwatering scrumptious
delectable divinely beautifully wonderfully perfectly exceptionally
impeccably flawlessly superbly magnificently gloriously stunningly
spotless sparkling gleaming
""".split()

WEAK_POS = """
good nice great pleasant lovely fine enjoyable comfortable comfy cozy cosy
quiet peaceful calm serene tranquil restful relaxing relaxed soothing still
friendly warm welcoming hospitable kind courteous polite gracious attentive
helpful accommodating responsive professional efficient prompt quick speedy
clean tidy neat fresh airy bright sunny spacious roomy generous ample
convenient central handy accessible walkable close nearby easy smooth
affordable reasonable fair inexpensive cheap budget-friendly economical
value worthwhile worthy recommended recommendable dependable reliable
trustworthy safe secure solid sturdy modern updated renovated refurbished
stylish chic elegant tasteful classy charming quaint picturesque scenic
romantic intimate private homey homely inviting appealing attractive
pretty cute adorable sweet pleasing satisfying satisfied happy glad pleased
delighted impressed grateful thankful content cheerful fun funny lively
vibrant festive entertaining interesting fascinating engaging memorable
authentic genuine original unique special rare vintage historic historical
iconic famous popular renowned beloved favorite favourite ideal handy
tasty flavorful flavourful savory savoury fragrant aromatic crisp crispy
tender juicy hearty filling fresh-baked homemade generous-sized plentiful
abundant varied diverse rich creamy smooth-textured light fluffy
gracefully quietly peacefully calmly warmly kindly politely cheerfully
smoothly comfortably conveniently cleanly freshly nicely pleasantly
helpfully courteously promptly efficiently professionally elegantly
charmingly tastefully romantically uniquely cleaner cleanest quieter
quietest friendlier friendliest nicer nicest cozier coziest calmer calmest
warmer warmest brighter brightest fresher freshest smoother smoothest
easier easiest cheaper cheapest safer safest prettier prettiest
sweeter sweetest tastier tastiest
upgrade upgraded perk perks bonus highlight highlights bargain deal
courtesy smile smiling thoughtful considerate caring personable
knowledgeable skilled talented capable competent organized well-organized
well-kept well-maintained well-located well-appointed well-stocked
well-lit well-run well-priced well-designed well-trained
""".split()

WEAK_NEG = """
noisy noise loud busy crowded packed congested hectic chaotic cramped
small tiny narrow tight stuffy musty damp humid drafty draughty chilly
cold hot sweaty sticky dusty worn tired dated outdated aging ageing old
shabby faded stained scuffed scratched chipped peeling creaky squeaky
rattling thin hollow flimsy wobbly lumpy saggy sagging hard stiff
uncomfortable inconvenient awkward confusing complicated unclear
slow sluggish delayed late unresponsive inattentive indifferent
unhelpful dismissive curt brusque abrupt impersonal cold-mannered
mediocre average ordinary bland plain boring dull unremarkable
uninspired forgettable disappointing underwhelming overpriced pricey
expensive costly steep overrated hyped misleading inaccurate outdated-info
smelly smell odor odour stale soggy greasy oily salty bitter burnt
overcooked undercooked lukewarm cold-food rubbery chewy dry tough
limited sparse scarce lacking missing broken faulty malfunctioning
unreliable spotty patchy weak faint dim dark gloomy dreary grim
messy cluttered untidy disorganized understaffed overbooked
far distant remote isolated inaccessible steep-climb hilly
noisier noisiest busier busiest smaller smallest older oldest
slower slowest colder coldest harder hardest darker darkest
blander blandest duller dullest worse noisily loudly slowly
poorly barely scarcely roughly awkwardly uncomfortably
annoying irritating bothersome tiresome tedious frustrating
queue queues line lines wait waits waiting crowds traffic construction
roadwork jackhammer sirens honking barking thump thumping footsteps
vibration vibrations echo echoing drip dripping leak leaking
""".split()

STRONG_NEG = """
terrible horrible awful dreadful atrocious abysmal appalling disgusting
revolting repulsive vile foul gross nasty filthy squalid grimy putrid
rancid moldy mouldy mildewed infested roach roaches cockroach cockroaches
bedbug bedbugs bugs fleas rodent rodents mice rats maggots vomit urine
rude hostile aggressive abusive insulting condescending arrogant
obnoxious unacceptable inexcusable unforgivable outrageous scandalous
disastrous catastrophic nightmare nightmarish hellish miserable wretched
horrendous horrid hideous ghastly grotesque shocking disturbing alarming
dangerous unsafe hazardous threatening sketchy shady scam scammed ripoff
rip-off fraud fraudulent dishonest lying stolen theft robbed burglary
broken-down condemned uninhabitable unsanitary unhygienic contaminated
poisoned sick sickening nauseating food-poisoning worst unbearable
intolerable insufferable excruciating agonizing painful freezing
sweltering scalding reeking reeked stank stinks stinking stench
terribly horribly awfully dreadfully disgustingly unbearably rudely
filthy-dirty trashed wrecked ruined destroyed damaged flooded
never-again avoid-this disaster dump hovel dive pigsty
""".split()

STRONG_POS_2 = """
adored adore adores loved love loves loving heaven bliss-inducing
astonishing astounding awe-inspiring awestruck beyond-expectations
best best-ever top-tier premier premium deluxe grandiose resplendent
ravishing alluring irresistible unmatched unrivaled unrivalled unparalleled
peerless matchless incomparable second-to-none superlative supreme
transcendent wondrous miraculous magical dreamlike dreamy fairytale
picture-perfect postcard-perfect jaw-dropping eye-popping show-stopping
heartwarming soul-soothing rejuvenating revitalizing restorative
invigorating energizing refreshing exhilarating thrilling electrifying
enthralling riveting spellbinding bewitching charmed enamored enchanted
overjoyed ecstatic elated euphoric thrilled raving rave adoringly
lovingly charismatic legendary epic triumphant victorious crowning
masterful virtuoso artisanal handcrafted heirloom museum-quality
pampered pampering spoiled-rotten red-carpet white-glove concierge-level
butler-worthy chef-quality michelin-worthy award-winning celebrated
acclaimed praised applauded commended honored honoured treasured cherished
prized coveted sought-after must-see must-visit must-try bucket-list
once-in-a-lifetime unrepeatable priceless invaluable
""".split()

WEAK_POS_2 = """
okay ok decent acceptable adequate sufficient passable presentable
respectable suitable proper functional workable practical sensible
useful usable serviceable manageable doable straightforward simple
uncomplicated hassle-free stress-free carefree effortless painless
seamless streamlined intuitive user-friendly family-friendly kid-friendly
pet-friendly wheelchair-accessible senior-friendly vegan-friendly
vegetarian-friendly gluten-free health-conscious eco-friendly sustainable
green organic local locally-sourced farm-fresh seasonal artisan
new newer newest brand-new newly-built newly-renovated remodeled
modernized contemporary current up-to-date state-of-the-art high-tech
smart automated digital keyless contactless cashless
soft plush-feeling cushioned padded supportive firm-but-comfy snug
toasty heated air-conditioned climate-controlled ventilated breezy
shaded sheltered covered enclosed gated guarded patrolled monitored
lit well-ventilated insulated soundproof soundproofed double-glazed
discreet respectful unobtrusive low-key mellow laid-back casual
relaxed-vibe easygoing unhurried leisurely slow-paced gentle mild
temperate pleasant-weather sunny-days clear cloudless starry moonlit
panoramic sweeping expansive unobstructed breath-of-fresh-air
photogenic instagrammable postcard-worthy scenic-overlook vista
lush verdant leafy green-space landscaped manicured blooming flowering
fragrant-garden tree-lined waterfront beachfront oceanfront lakefront
riverside hillside cliffside mountain-view sea-view bay-view city-view
courtyard terrace balcony rooftop patio garden pool poolside jacuzzi
hot-tub sauna steam-room spa-like resort-style club-level vip
complimentary free freebie included all-inclusive unlimited bottomless
refillable generous-portions family-sized shareable hearty-helping
prompt-service speedy-checkin express-checkout early-checkin late-checkout
flexible negotiable understanding forgiving patient attentive-to-detail
detail-oriented meticulous thorough conscientious diligent dedicated
devoted passionate enthusiastic eager willing proactive anticipatory
intuitive-service personalized customized tailored bespoke curated
handpicked selective exclusive boutique intimate-setting secluded
tucked-away hidden-gem off-the-beaten-path undiscovered unspoiled
untouched pristine-condition mint-condition like-new barely-used
gleaming-clean sanitized disinfected sterilized deep-cleaned freshened
deodorized laundered pressed crisp-linens fluffy-towels plump-pillows
""".split()

WEAK_NEG_2 = """
meh so-so middling run-of-the-mill cookie-cutter generic soulless
characterless sterile clinical institutional bare barren spartan
minimal basic bare-bones no-frills stripped-down skimpy stingy meager
meagre insufficient inadequate subpar substandard second-rate third-rate
low-budget cut-rate bargain-basement cheap-feeling cheaply-made
mass-produced flimsy-feeling plasticky tinny hollow-sounding
paper-thin threadbare frayed tattered ragged moth-eaten bedraggled
unkempt neglected untended overgrown weedy littered strewn dingy
drab dim-lit badly-lit windowless airless claustrophobic boxy
poky pokey cramped-quarters shoebox closet-sized matchbox undersized
overcrowded jammed jam-packed sardine-like standing-room-only
oversold overbooked double-booked bumped waitlisted queued
interminable endless never-ending dragging crawling glacial snail-paced
tardy behind-schedule postponed rescheduled canceled cancelled
inconsistent erratic unpredictable hit-or-miss variable uneven patchwork
half-hearted lackluster lacklustre uninterested bored disengaged
distracted preoccupied absent-minded forgetful careless sloppy slapdash
hasty rushed cursory perfunctory superficial token bare-minimum
begrudging reluctant unwilling inflexible rigid strict bureaucratic
officious nitpicky petty penny-pinching nickel-and-diming upcharged
surcharged hidden-fees overcharged double-charged misbilled
misquoted misinformed misdirected lost confused disoriented
noises clattering clanking banging slamming buzzing humming droning
whirring grinding screeching squealing blaring booming thudding
pounding hammering drilling stomping shuffling chattering shouting
yelling partying rowdy raucous boisterous unruly disruptive
inconsiderate thoughtless oblivious selfish entitled demanding
pushy aggressive-sales touty scammy-feeling suspicious dubious
questionable iffy borderline marginal mediocre-at-best forgettable
unmemorable bland-tasting flavorless flavourless tasteless watery
diluted watered-down thin-soup insipid unseasoned underseasoned
oversalted oversweet cloying sickly-sweet artificial processed frozen
reheated microwaved pre-packaged canned instant powdered imitation
stale-bread wilted limp mushy soggy-fries cold-coffee weak-coffee
burnt-toast overdone underdone raw-center pink-center dried-out
leathery gristly fatty greasy-spoon oily-film
""".split()

STRONG_NEG_2 = """
hate hated hates hateful loathe loathed loathsome despise despised
detest detested abhor abhorred abhorrent deplorable despicable
contemptible shameful disgraceful dishonorable ignominious
insulting-service humiliating degrading demeaning belittling mocking
ridiculing sneering scornful derisive dismissive-rude contemptuous
threatening menacing intimidating bullying harassing stalking
assaulted attacked mugged pickpocketed swindled conned cheated
deceived defrauded exploited extorted blackmailed overbilled-scam
criminal illegal unlawful violating negligent reckless irresponsible
incompetent inept bungling clueless hopeless useless worthless
pointless futile vain wasted squandered ruined-trip spoiled-vacation
derailed sabotaged botched butchered mangled massacred slaughtered
traumatic traumatizing scarring haunting nightmare-fuel horror-show
house-of-horrors chamber-of-horrors torture torturous agonizing-wait
excruciatingly unbearably-hot unbearably-cold hypothermic heatstroke
suffocating asphyxiating choking gagging retching vomiting nauseous
nauseated queasy ill poisoned-food salmonella e-coli norovirus
contagion quarantine pestilent plague-ridden verminous rat-infested
flea-ridden lice-ridden scabies biohazard toxic radioactive
condemnable demolition-ready collapsing crumbling caving derelict
abandoned-looking post-apocalyptic war-zone bombed-out gutted
flooded-room sewage backed-up overflowing clogged blocked-drain
leaking-ceiling burst-pipe electrocution-risk exposed-wiring
fire-hazard death-trap lawsuit-worthy health-code-violation
shut-it-down zero-stars negative-stars never-returning boycott
blacklisted warned-off steer-clear run-away flee avoid
""".split()

VALUES = [
    (STRONG_POS, 1.0),
    (STRONG_POS_2, 1.0),
    (WEAK_POS, 0.5),
    (WEAK_POS_2, 0.5),
    (WEAK_NEG, -0.5),
    (WEAK_NEG_2, -0.5),
    (STRONG_NEG, -1.0),
    (STRONG_NEG_2, -1.0),
]

# review-domain words whose polarity the split lists above get wrong or miss
OVERRIDES = {
    "exceptional": 1.0,
    "luxurious": 1.0,
    "beautiful": 1.0,
    "quiet": 0.5,
    "peaceful": 0.5,
    "romantic": 0.5,
    "vintage": 0.5,
    "noise": -0.5,
    "noisy": -0.5,
    "busy": -0.5,
    "loud": -0.5,
    "dirty": -1.0,
    "spotless": 1.0,
}


def main() -> None:
    lex: dict[str, float] = {}
    for words, value in VALUES:
        for w in words:
            w = w.strip().lower()
            if w:
                lex[w] = value
    lex.update(OVERRIDES)
    out = Path(__file__).resolve().parents[1] / "src/subjsearch/resources/opinion_lexicon.tsv"
    with open(out, "w", encoding="utf-8") as f:
        for token in sorted(lex):
            f.write(f"{token}\t{lex[token]:+.1f}\n")
    print(f"wrote {len(lex)} entries to {out}")


if __name__ == "__main__":
    main()
