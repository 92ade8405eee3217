#!/usr/bin/env python3
# Copyright 2026 The Stylo Authors. All Rights Reserved.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates assets/easy_words.txt: a snapshot of roughly 3,000 familiar
English words (curated base vocabulary plus regular inflections). Words on
this list are "easy"; everything else counts as difficult.
Usage: python3 tools/gen_easy_words.py > assets/easy_words.txt
"""

FUNCTION_WORDS = """
a about above across after afternoon again against ago all almost alone along
already also although always am among an and another any anybody anyone
anything anywhere are around as at away back be because been before began
begin behind being below beneath beside between beyond both but by can cannot
could did do does done down during each either else enough even ever every
everybody everyone everything everywhere far few for from front full had has
have having he her here hers herself him himself his how however i if in
indeed inside instead into is it its itself just last least less let like
little many may maybe me might mine more most much must my myself near
nearly neither never next no nobody none nor not nothing now nowhere of off
often oh on once one only onto or other others ought our ours ourselves out
outside over own perhaps quite rather really same several shall she should
since so some somebody someone something sometimes somewhere soon still such
than that the their theirs them themselves then there these they this those
though through till to together too toward two under until up upon us very
was we well were what when where whether which while who whole whom whose why
will with within without would yes yet you your yours yourself
""".split()

NOUNS = """
age air airplane animal answer apple arm aunt autumn baby ball balloon banana
band bank barn basket bath beach bean bear beauty bed bee bell belt bench
berry bicycle bird birthday bit blanket block blood board boat body bone book
boot bottle bottom bowl box boy branch bread breakfast brick bridge brother
brush bubble bucket bug building bunny bus bush butter button cake camp
candle candy cap captain car card carpet carrot cart case cat cave cent chain
chair chalk chance cheek cheese cherry chest chicken chief child children
chin church circle city class clock cloth cloud coat coffee corn corner
cotton country cousin cow crack cream crowd cup curtain dad daddy dance day
deer desk dime dinner dirt dish doctor dog doll dollar door dozen dream dress
drink drop drum duck dust ear earth edge egg elephant end evening eye face
fact fall family fan farm farmer father feather fellow fence field finger
fire fish flag floor flower fly fog food foot forest fork fox friend frog
fruit fun game garden gate gift girl glass goat gold goose grade grain grass
ground group guess gun hair half hall hand handle hat hay head heart hen hill
hole holiday home honey hook horn horse hour house ice idea inch iron island
jacket jar job joke juice kitchen kite kitten knee knife lady lake lamp land
lap leaf leg lesson letter library life light line lion lip list log lot
lunch machine mail man map market match meal meat men milk mind minute mirror
mitten moment money monkey month moon morning mother mountain mouse mouth
movie music nail name neck needle neighbor nest news nickel night noise noon
nose note number nurse nut ocean office orange oven owl page pail pain paint
pair pan pancake paper parent park part party paste path paw pea peach pen
pencil penny people person pet picnic picture pie piece pig pillow pin place
plan plane plant plate pocket point pole pond pony pool porch pot potato
present price prince princess prize puppy purse queen question rabbit race
radio rain rainbow reason rest ribbon rice ride ring river road robin rock
roll roof room rope rose row rug rule salt sand school sea seat second seed
sentence sheep shell ship shirt shoe shop side sign silver sister size skin
sky sled sleep smell smile smoke snow sock son song sound soup spoon spot
spring squirrel stairs stamp star station steam step stick stocking stone
store storm story stove street string sugar summer sun supper table tail
teacher team tear telephone tent thing thread ticket tiger time tin toe
tomorrow tongue tonight tool tooth top town toy track train tree trick trip
truck trunk turkey turn uncle valley village visit voice wagon walk wall
watch water wave way weather week wheat wheel wind window wing winter wire
wish woman women wood wool word work world yard year
army arrow attic award ax bag baker base basement bat beam beard beast
beat beef beggar bill bin birth biscuit bite blacksmith blade blame
blossom blot blouse bond bonnet boss bough breast breath breeze broom brow
bud buffalo bull bump bundle burst cabbage cabin cage calf camel camera
canal cannon canoe canyon carpenter castle cattle cause cellar chamber
charge charm cheer chimney chocolate chop claw clay cliff clothes clover
club coach coal coast cobbler cocoa coconut collar colt comfort company
cone cord cork cost couch course court crab cradle crop crow crumb crust
cub cupboard dairy dash date daughter dawn deal death deed diamond ditch
dive dock donkey dot dough dove dragon drain drawer drill driver dusk duty
eagle earring effort engine engineer errand event exit fairy faith fame
fault favor fear feast fever fiddle fifth film fireman fist flame flash
flea flesh flight flock flood flour foam foe fool forehead fort fortune
fountain fowl frame freight frost frown fur furniture gallon gang garage
garbage gas gasoline ghost giant ginger glove glue goodness grandfather
grandmother grape grove guard guest guide gulf habit hammer harbor harm
harness harp harvest haste hatch hatchet hawk heap heel height herd hero
hint hive hood hoof hoop host hotel hound hut hymn insect ivory ivy jail
jam jelly jewel judge jug kettle key king kingdom knot lace ladder lamb
lane lantern lawn leader leather ledge lightning lily limb lime linen load
loaf locker lodge lord luck lumber magic maid mailbox mama mask mast
master mate mayor meadow member mice midnight mill miner mist mole mop
moss moth motor mud mule mustard mystery nation nature navy neighborhood
nephew net niece oak oar oatmeal object offer oil onion owner ox pace
package paddle palace pansy pants papa parade pardon partner passenger
patch patient pattern pavement peak peanut pear pearl peel peg pepper
perfume pest pigeon pile pilot pint pipe pirate pitcher pity plank
playground plow plum plumber poem poet poison popcorn postman powder power
prairie prayer preacher print prison pump pumpkin pupil pyramid quart
quarter quilt rag rail railroad rake ranch rat rattle ray razor record
reward rhyme riddle rim robber robe rod rooster root rot route rubber
ruby rust sack saddle sail sailor salad sale sap sash sauce saucer sausage
saw scale scarf scene scent schoolhouse scissors score scrap screen screw
seal seam season servant shade shadow shape shed sheet shelf shepherd
sheriff shield shoulder shovel shower sidewalk silk sill sin singer sip
slave sleeve slice slipper slope snail snake soap soldier sole sort speech
speed spider spike spirit sponge spool sport spray spy stable stack stage
stall stem stitch stomach stool stranger strap straw stream strength
stripe stump subject suit sum swamp swan sweater switch sword syrup tag
tank tap tax tea telegram temper thief thimble thirst throat throne thumb
thunder tide tip title toad toast tobacco tone torch tourist towel tower
trail trap tray treasure treat tribe trouble trousers trout trumpet tub
tube tulip tune tunnel turtle twig twin van vase vegetable vessel vine
violet wealth weapon web weed whale wharf whisker wolf worm wound wren
wrist zoo
""".split()

VERBS = """
act add agree answer appear arrive ask bake bark beg begin believe belong
bite blow boil borrow bow break bring build burn buy call care carry catch
change chase choose clap clean click climb close come cook copy count cover
crawl cross cry cut dance dare decide dig divide draw dream dress drink
drive drop dry eat end enjoy enter expect explain fall fasten feed feel
fight fill find finish fish fit fix flash float flow fold follow forget
forgive freeze frighten gather get give glow go grab grow guess hand hang
happen hate hear heat help hide hit hold hop hope hug hunt hurry hurt invite
join joke jump keep kick kill kiss knock know land laugh lay lead lean learn
leave lend lick lie lift like listen live lock look lose love make march
mark marry mean meet melt mend mind miss mix move need nod notice obey open
order own pack pass paste pat pay peck permit pick plant play please point
pour practice press pretend promise pull push put race rain raise reach read
remain remember repeat reply rest return ride ring rise roar rob rock roll
rub run rush save say scare scream see seem sell send serve set sew shake
share shine shoot shout show shut sing sink sit skate skip sleep slide slip
smell smile snap sneeze snow speak spell spend spill splash stand start stay
steal stick stop strike study surprise swallow sweep swim swing take talk
taste teach tear tell thank think throw tie touch trade travel trust try
turn visit wait wake want warm wash waste watch wave wear whip whisper
whistle win wipe wonder work worry wrap write
""".split()

ADJECTIVES = """
able afraid alike alive angry asleep awake bad bare big bitter black blue
brave bright brown busy careful cheap clean clear clever cold cool cross
dark dead dear deep different dirty dry dull early easy empty fair false
fast fat fine first flat free fresh friendly funny gay gentle glad golden
good gray great green happy hard heavy high hungry hurt kind large late lazy
light little lively long loud low lucky mad merry middle mild narrow neat
new nice noisy old orange pale pink plain pleasant polite poor pretty proud
purple quick quiet ready real red rich right ripe rough round sad safe salty
second sharp short sick silly simple sleepy slow small smart smooth soft
sore sorry sour special square steep sticky straight strange strong sudden
sweet tall tame third thick thin tiny tired true ugly warm weak wet white
wide wild wise wrong yellow young
""".split()

OTHER = """
ah aboard anyhow anyway apart april august bang beside bump buzz bye
december dong east everyday february friday goodbye hello hi hooray hush
january july june march may monday north november october ouch pop quack
saturday september south sunday thursday tuesday wednesday west whee whoa
yesterday
""".split()


def plural(word):
    if word.endswith(("s", "sh", "ch", "x", "z")):
        return word + "es"
    if word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "ies"
    return word + "s"


def past(word):
    if word.endswith("e"):
        return word + "d"
    if word.endswith("y") and word[-2] not in "aeiou":
        return word[:-1] + "ied"
    return word + "ed"


def progressive(word):
    if word.endswith("e") and not word.endswith("ee"):
        return word[:-1] + "ing"
    return word + "ing"


def main():
    words = set(FUNCTION_WORDS) | set(OTHER)
    for noun in NOUNS:
        words.add(noun)
        words.add(plural(noun))
    for verb in VERBS:
        words.add(verb)
        words.add(plural(verb))
        words.add(past(verb))
        words.add(progressive(verb))
    for adj in ADJECTIVES:
        words.add(adj)
    for word in sorted(words):
        print(word)


if __name__ == "__main__":
    main()
